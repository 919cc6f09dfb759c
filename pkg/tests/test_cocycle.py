import itertools
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wadabiq import corpus
from wadabiq.algebra import symmetric
from wadabiq.biquandle import W1, W2, abelian_wada, from_wada
from wadabiq.cocycle import (Cochain1, Cochain2, GroupRingElement, additive, additive_cocycle,
                             boundary2, chain_boundary, delta1, delta1_matrix, delta2, evaluate,
                             h2_rank, independent_mod_coboundaries, is_cocycle, is_cycle,
                             mochizuki_cocycle, per_coloring_weight, satisfies_type_one,
                             state_sum)
from wadabiq.coloring import count_colorings, enumerate_colorings
from wadabiq.numbering import mod2_numbering
from wadabiq.wadagroup import braid_vector_coloring
from wadabiq.diagram import parse_braid

CARRIERS = [abelian_wada(n) for n in range(2, 8)] + [from_wada(W2, symmetric(3))]


def zero2(m, mod=None):
    return Cochain2(np.zeros((m, m), dtype=int), mod)


# coboundary maps ------------------------------------------------------------------

def test_delta1_examples():
    b = abelian_wada(3)
    assert not delta1(Cochain1(np.zeros(3, dtype=int), 3), b).values.any()
    g = Cochain1([0, 1, 2], 3)
    assert delta1(g, b).values.tolist() == [[0] * 3] * 3


@given(st.integers(2, 7), st.data())
def test_delta1_abelian_formula(n, data):
    gv = data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    g = Cochain1(gv, n)
    d = delta1(g, abelian_wada(n))
    for x, y in itertools.product(range(n), repeat=2):
        assert d(x, y) == (gv[x] + gv[y] - gv[(-y) % n] - gv[(x + 2 * y) % n]) % n


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 5), st.data())
def test_delta2_abelian_specialisation(n, data):
    F = data.draw(st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                           min_size=n, max_size=n))
    f = Cochain2(F, n)
    table = delta2(f, abelian_wada(n))
    for x, y, z in itertools.product(range(n), repeat=3):
        lhs = F[x][y] + F[(2 * y + x) % n][z] + F[-y % n][-z % n]
        rhs = F[y][z] + F[x][-z % n] + F[(x - 2 * z) % n][(2 * z + y) % n]
        assert table[x, y, z] == (lhs - rhs) % n


def test_delta2_examples():
    assert not delta2(zero2(4, 4), abelian_wada(4)).any()
    assert not delta2(additive_cocycle(5), abelian_wada(5)).any()


@pytest.mark.parametrize("b", CARRIERS, ids=lambda b: b.name)
def test_delta2_after_delta1_vanishes(b):
    rng = np.random.default_rng(b.size)
    for _ in range(5):
        g = Cochain1(rng.integers(0, 7, b.size), 7)
        assert not delta2(delta1(g, b), b).any()


# cocycles ------------------------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 8))
def test_additive_cocycle(n):
    b, f = abelian_wada(n), additive_cocycle(n)
    assert is_cocycle(f, b) and satisfies_type_one(f, b)
    assert f(1, 2 % n) == 3 % n and f(0, 0) == 0 and f(n - 1, 1) == 0
    assert not boundary2(1, 0, b)
    assert evaluate(f, {(1, 0): 1}) == 1


def test_product_cocycle_mod4_pinned():
    x, y = np.meshgrid(np.arange(4), np.arange(4), indexing="ij")
    f = Cochain2(x * y, 4)
    b = abelian_wada(4)
    assert is_cocycle(f, b) is True
    assert satisfies_type_one(f, b) is False


def test_zero_cochain_is_type_one_cocycle():
    b = abelian_wada(3)
    assert is_cocycle(zero2(3, 3), b) and satisfies_type_one(zero2(3, 3), b)


def test_mochizuki_values():
    h = mochizuki_cocycle(3)
    assert h(1, 1) == 1
    for y in range(3):
        assert h(0, y) == (-2 * y ** 3) % 3
    assert mochizuki_cocycle(5)(0, 0) == 0
    with pytest.raises(ValueError):
        mochizuki_cocycle(4)
    with pytest.raises(ValueError):
        mochizuki_cocycle(2)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_mochizuki_is_type_one_cocycle(p):
    b, h = abelian_wada(p), mochizuki_cocycle(p)
    assert is_cocycle(h, b) and satisfies_type_one(h, b)


def test_mochizuki_cycles():
    c3 = {(1, 1): 1, (2, 2): 2}
    c5 = {(1, 1): 1, (2, 2): 2, (3, 3): 4}
    assert is_cycle(c3, abelian_wada(3), 3) and is_cycle(c5, abelian_wada(5), 5)
    assert evaluate(mochizuki_cocycle(3), c3) != 0
    assert evaluate(mochizuki_cocycle(5), c5) != 0
    # only a cycle mod p, not over Z
    assert chain_boundary(c3, abelian_wada(3)) == Counter({2: 3, 0: -3})


def test_boundary_examples():
    b = abelian_wada(3)
    assert boundary2(1, 1, b) == Counter({1: 2, 2: -1, 0: -1})
    B = from_wada(W1, symmetric(3))
    for a in range(B.size):
        assert not boundary2(B.xa[a], a, B)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.data())
def test_coboundaries_vanish_on_cycles(n, data):
    b = abelian_wada(n)
    g = Cochain1(data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)), n)
    f = delta1(g, b)
    # integer cycles: (x, 0) and type-I pairs, with random coefficients
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    chain = {(x, 0): k for x, k in enumerate(coeffs)}
    assert is_cycle(chain, b)
    assert evaluate(f, chain) == 0


def test_h2_rank_golden():
    assert h2_rank(abelian_wada(2), 2) == 4
    assert h2_rank(abelian_wada(3), 3) == 3
    assert h2_rank(abelian_wada(5), 5) == 3
    with pytest.raises(ValueError):
        h2_rank(abelian_wada(4), 4)


@pytest.mark.parametrize("p", [3, 5])
def test_additive_and_mochizuki_independent(p):
    b = abelian_wada(p)
    assert h2_rank(b, p) >= 2
    assert independent_mod_coboundaries([additive_cocycle(p), mochizuki_cocycle(p)], b, p)
    assert not independent_mod_coboundaries([delta1(Cochain1(np.arange(p), p), b)], b, p)


def test_delta1_matrix_matches_delta1():
    b = abelian_wada(5)
    M = np.array(delta1_matrix(b))
    g = np.array([3, 1, 4, 1, 5])
    assert np.array_equal((M @ g) % 5, delta1(Cochain1(g, 5), b).values.ravel())


# state sums -------------------------------------------------------------------------

def test_state_sum_examples():
    u = state_sum(corpus.load("unknot"), abelian_wada(4), additive_cocycle(4))
    assert u.as_dict() == {0: 4}
    t = state_sum(corpus.load("trefoil"), abelian_wada(3), additive_cocycle(3))
    assert t.as_dict() == {0: 9} and t.is_trivial()
    v = state_sum(corpus.load("vt2_2"), abelian_wada(3), additive_cocycle(3))
    assert str(v) == "1 + t + t^2 (mod 3)" and not v.is_trivial()


def test_state_sum_rendering():
    e = GroupRingElement(modulus=None)
    e.add(-2, 3)
    e.add(0)
    e.add(5)
    assert str(e) == "3*t^-2 + 1 + t^5"
    assert str(GroupRingElement(modulus=3)) == "0 (mod 3)"


def test_state_sum_warns_on_non_cocycle():
    x, y = np.meshgrid(np.arange(4), np.arange(4), indexing="ij")
    with pytest.warns(UserWarning):
        state_sum(corpus.load("trefoil"), abelian_wada(4), Cochain2(x * y, 4))


@pytest.mark.parametrize("entry", corpus.entries(), ids=lambda e: e.name)
@pytest.mark.parametrize("n", [3, 5])
def test_augmentation_is_coloring_count(entry, n):
    d = entry.diagram()
    for f in (additive_cocycle(n), mochizuki_cocycle(n)):
        phi = state_sum(d, abelian_wada(n), f)
        assert phi.augmentation == count_colorings(d, abelian_wada(n))


@pytest.mark.parametrize("entry", corpus.entries(), ids=lambda e: e.name)
@pytest.mark.parametrize("n", [3, 5, 7])
def test_numbered_diagrams_have_zero_weights(entry, n):
    d = entry.diagram()
    if mod2_numbering(d) is None:
        pytest.skip("no mod-2 numbering")
    b, f = abelian_wada(n), additive_cocycle(n)
    for c in enumerate_colorings(d, b):
        assert per_coloring_weight(d, b, f, c) == 0


@pytest.mark.parametrize("k", range(1, 6))
def test_vt2k_integer_witness_weight(k):
    w = parse_braid(corpus.entry(f"vt2_{k}").text)
    c = braid_vector_coloring(w, [k + 1, 1 - k])
    assert per_coloring_weight(corpus.load(f"vt2_{k}"), None, additive, c) == 2 * k


def test_per_coloring_weight_examples():
    d = corpus.load("vt2_2")
    assert per_coloring_weight(d, abelian_wada(3), additive_cocycle(3), (0,) * 4) == 0
    with pytest.raises(ValueError):
        per_coloring_weight(d, abelian_wada(3), additive_cocycle(3), (1, 1, 1, 1))
    with pytest.raises(ValueError):
        per_coloring_weight(d, None, additive, (1, 1, 1, 1))


def test_type_one_needs_biquandle():
    from wadabiq.biquandle import Biquandle
    # permutation solution R(x, y) = (y + 1, x + 1) on Z_3 is a birack without type I
    x, y = np.meshgrid(np.arange(3), np.arange(3), indexing="ij")
    b = Biquandle((y + 1) % 3, (x + 1) % 3)
    assert not b.is_biquandle
    with pytest.raises(ValueError):
        satisfies_type_one(zero2(3, 3), b)
