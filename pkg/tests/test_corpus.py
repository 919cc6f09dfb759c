import pytest

from wadabiq import corpus
from wadabiq.algebra import cyclic, dihedral, semidirect_cyclic, symmetric
from wadabiq.biquandle import abelian_wada, from_wada
from wadabiq.cocycle import additive_cocycle, mochizuki_cocycle, state_sum
from wadabiq.coloring import count_colorings
from wadabiq.diagram import parse_braid, parse_gauss

PAIRS = corpus.equivalent_pairs()
CARRIERS = ([abelian_wada(n) for n in (2, 3, 4, 5, 7)]
            + [from_wada(kind, G) for kind in ("W1", "W2", "Core")
               for G in (symmetric(3), dihedral(4), semidirect_cyclic(5, 4, 2))])


def test_names_unique_and_listed():
    names = corpus.names()
    assert len(names) == len(set(names))
    for required in ("unknot", "trefoil", "figure8", "hopf_virtual", "kishino", "vt_sum",
                     *(f"vt2_{k}" for k in range(1, 6))):
        assert required in names


def test_unknown_name():
    with pytest.raises(KeyError, match="no corpus entry"):
        corpus.entry("nope")


@pytest.mark.parametrize("entry", corpus.entries(), ids=lambda e: e.name)
def test_entry_parses(entry):
    assert entry.note
    if entry.text.startswith("n="):
        parse_braid(entry.text)
    else:
        assert str(parse_gauss(entry.text)) == entry.text
    d = entry.diagram()
    assert d.num_edges >= 1
    assert corpus.load(entry.name, mirror=True).mirror


def test_shapes():
    k = corpus.load("kishino")
    assert (k.num_crossings, k.components) == (4, 1)
    assert corpus.load("hopf_virtual").components == 2
    assert corpus.load("vt_sum").components == 1
    for j in range(1, 6):
        assert corpus.load(f"vt2_{j}").components == (2 if j % 2 else 1)


def test_pairs_refer_to_entries():
    names = set(corpus.names())
    assert PAIRS
    for a, b, move in PAIRS:
        assert a in names and b in names and move


@pytest.mark.parametrize("a,b,move", PAIRS, ids=lambda x: str(x))
@pytest.mark.parametrize("mirror", [False, True])
def test_pair_coloring_counts_agree(a, b, move, mirror):
    da, db = corpus.load(a, mirror), corpus.load(b, mirror)
    for X in CARRIERS:
        assert count_colorings(da, X) == count_colorings(db, X), X.name


@pytest.mark.parametrize("a,b,move", PAIRS, ids=lambda x: str(x))
@pytest.mark.parametrize("n", [3, 5, 7])
def test_pair_state_sums_agree(a, b, move, n):
    da, db = corpus.load(a), corpus.load(b)
    X = abelian_wada(n)
    for f in (additive_cocycle(n), mochizuki_cocycle(n)):
        assert state_sum(da, X, f).as_dict() == state_sum(db, X, f).as_dict()


def test_non_equivalent_entries_are_told_apart():
    X = from_wada("W2", semidirect_cyclic(5, 4, 2))
    assert count_colorings(corpus.load("kishino"), X) != count_colorings(corpus.load("unknot"), X)
    Z3 = abelian_wada(3)
    phi = state_sum(corpus.load("vt2_2"), Z3, additive_cocycle(3))
    psi = state_sum(corpus.load("unknot"), Z3, additive_cocycle(3))
    assert phi.as_dict() != psi.as_dict()
    assert count_colorings(corpus.load("trefoil"), Z3) != count_colorings(corpus.load("unknot"), Z3)
    assert count_colorings(corpus.load("hopf_virtual"), from_wada("Core", symmetric(3))) != \
        count_colorings(corpus.load("hopf_virtual"), from_wada("W1", symmetric(3)))
    assert count_colorings(corpus.load("unknot"), from_wada("W1", cyclic(4))) == 4
