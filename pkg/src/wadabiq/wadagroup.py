"""
Wada group presentations of diagrams, abelianization, homomorphism
counting into finite groups, Tietze simplification, and the integer
braid matrices of the abelian Wada representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (FiniteGroup, SmithForm, identity_matrix, integer_kernel, matmul,
                      smith_normal_form)
from .biquandle import WADA_PAIRS, WadaPair
from .diagram import Diagram, VirtualBraidWord, braid_strand_edges


def _free_reduce(word) -> tuple:
    out = []
    for g, e in word:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def _cyclic_reduce(word) -> tuple:
    word = list(_free_reduce(word))
    while len(word) > 1 and word[0] == (word[-1][0], -word[-1][1]):
        word = word[1:-1]
    return tuple(word)


def _inverse(word) -> tuple:
    return tuple((g, -e) for g, e in reversed(word))


@dataclass(frozen=True)
class Presentation:
    """Generators ``0..gens-1``; relators are tuples of ``(generator, +-1)``."""

    gens: int
    relators: tuple = ()
    names: tuple | None = None

    def __post_init__(self):
        rels = []
        for r in self.relators:
            r = _free_reduce(tuple((int(g), int(e)) for g, e in r))
            if any(not 0 <= g < self.gens or e not in (1, -1) for g, e in r):
                raise ValueError(f"bad relator {r}")
            if r:
                rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"g{i}" for i in range(self.gens)))

    def format_word(self, word) -> str:
        out = []
        for g, e in word:
            if out and out[-1][0] == g:
                out[-1][1] += e
            else:
                out.append([g, e])
        return " ".join(self.names[g] if e == 1 else f"{self.names[g]}^{e}" for g, e in out)

    def __str__(self):
        return (f"<{','.join(self.names)} | "
                f"{', '.join(self.format_word(r) for r in self.relators)}>")


def _as_pair(kind) -> WadaPair:
    if isinstance(kind, WadaPair):
        return kind
    return WADA_PAIRS[str(kind).lower()]


def _substitute(letters, a, b) -> list:
    sub = {"x": a, "y": b}
    out = []
    for sym, e in letters:
        g = sub[sym]
        out.extend([(g, 1 if e > 0 else -1)] * abs(e))
    return out


def presentation(d: Diagram, kind) -> Presentation:
    """One generator per edge, relators a3 u(a1,a2)^-1 and a4 v(a1,a2)^-1 per crossing."""
    pair = _as_pair(kind)
    rels = []
    for _, a1, a2, a3, a4 in d.relations():
        u = _substitute(pair.u.letters, a1, a2)
        v = _substitute(pair.v.letters, a1, a2)
        rels.append(((a3, 1),) + _inverse(u))
        rels.append(((a4, 1),) + _inverse(v))
    return Presentation(d.num_edges, tuple(rels))


def abelianization(p: Presentation) -> SmithForm:
    rows = []
    for r in p.relators:
        row = [0] * p.gens
        for g, e in r:
            row[g] += e
        rows.append(row)
    return smith_normal_form(rows, cols=p.gens)


# ---------------------------------------------------------------------------
# homomorphism counting


def hom_count(p: Presentation, G: FiniteGroup) -> int:
    """Number of homomorphisms from the presented group to G.

    Backtracks over generator images.  A relator is checked once all its
    generators are assigned.  A relator with a single unassigned
    generator restricts it to the values that satisfy the relator: an
    empty set prunes, a singleton is assigned at once, and otherwise the
    smallest such set is where the search branches next.
    """
    if p.gens == 0:
        return 1
    mul, inv, e_id = G.rows, G.inv_list, G.identity
    rels = p.relators
    occ = []
    for r in rels:
        cnt: dict[int, int] = {}
        for g, _ in r:
            cnt[g] = cnt.get(g, 0) + 1
        occ.append(cnt)
    weight = [0] * p.gens
    for cnt in occ:
        for g in cnt:
            weight[g] += 1
    order = sorted(range(p.gens), key=lambda g: (-weight[g], g))
    touch = [[] for _ in range(p.gens)]
    for k, cnt in enumerate(occ):
        for g in cnt:
            touch[g].append(k)
    img = [-1] * p.gens
    everything = range(G.order)

    def value(word):
        x = e_id
        for g, e in word:
            x = mul[x][img[g] if e > 0 else inv[img[g]]]
        return x

    def candidates(k, g):
        r = rels[k]
        if occ[k][g] == 1:
            i = next(i for i, (h, _) in enumerate(r) if h == g)
            left, right = value(r[:i]), value(r[i + 1:])
            # left * g^e * right = 1
            if r[i][1] > 0:
                return [mul[inv[left]][inv[right]]]
            return [mul[right][left]]
        out = []
        for x in everything:
            img[g] = x
            if value(r) == e_id:
                out.append(x)
        img[g] = -1
        return out

    def propagate(start, trail):
        queue = [start]
        while queue:
            g0 = queue.pop()
            for k in touch[g0]:
                free = [g for g in occ[k] if img[g] < 0]
                if not free:
                    if value(rels[k]) != e_id:
                        return False
                elif len(free) == 1:
                    cand = candidates(k, free[0])
                    if not cand:
                        return False
                    if len(cand) == 1:
                        img[free[0]] = cand[0]
                        trail.append(free[0])
                        queue.append(free[0])
        return True

    def branch():
        best = None
        for k, cnt in enumerate(occ):
            free = [g for g in cnt if img[g] < 0]
            if len(free) == 1 and len(cnt) > 1:
                cand = candidates(k, free[0])
                if best is None or len(cand) < len(best[1]):
                    best = (free[0], cand)
        if best is not None:
            return best
        g = next((g for g in order if img[g] < 0), None)
        return None if g is None else (g, everything)

    def search():
        pick = branch()
        if pick is None:
            return 1
        g, cand = pick
        total = 0
        for x in cand:
            img[g] = x
            trail = [g]
            if propagate(g, trail):
                total += search()
            for h in trail:
                img[h] = -1
        return total

    # relators in a single generator restrict it before any branching
    trail: list[int] = []
    for k, cnt in enumerate(occ):
        if len(cnt) == 1:
            (g,) = cnt
            if img[g] < 0:
                cand = candidates(k, g)
                if not cand:
                    return 0
                if len(cand) == 1:
                    img[g] = cand[0]
                    trail.append(g)
                    if not propagate(g, trail):
                        return 0
    return search()


# ---------------------------------------------------------------------------
# Tietze simplification


def simplify(p: Presentation) -> Presentation:
    """Eliminate generators occurring exactly once in some relator.

    Relators are cyclically reduced; the generator is solved for and
    substituted everywhere, shortest relator first.  Homomorphism counts
    are unchanged.
    """
    rels = [_cyclic_reduce(r) for r in p.relators]
    rels = [r for r in rels if r]
    alive = list(range(p.gens))
    while True:
        best = None
        for k, r in enumerate(rels):
            counts: dict[int, int] = {}
            for g, _ in r:
                counts[g] = counts.get(g, 0) + 1
            for g, c in counts.items():
                if c == 1 and (best is None or len(r) < best[0]):
                    best = (len(r), k, g)
        if best is None:
            break
        _, k, g = best
        r = rels.pop(k)
        i = next(i for i, (h, _) in enumerate(r) if h == g)
        rest = r[i + 1:] + r[:i]           # g^e * rest = 1
        image = _inverse(rest) if r[i][1] > 0 else rest
        new = []
        for s in rels:
            out = []
            for h, e in s:
                if h == g:
                    out.extend(image if e > 0 else _inverse(image))
                else:
                    out.append((h, e))
            s = _cyclic_reduce(out)
            if s and s not in new:
                new.append(s)
        rels = new
        alive.remove(g)
    index = {g: i for i, g in enumerate(alive)}
    rels = tuple(tuple((index[g], e) for g, e in r) for r in rels)
    return Presentation(len(alive), rels, tuple(p.names[g] for g in alive))


# ---------------------------------------------------------------------------
# braid matrices

_BLOCKS = {"s": ((0, -1), (1, 2)), "S": ((2, 1), (-1, 0)), "v": ((0, 1), (1, 0))}


def letter_matrix(n: int, kind: str, i: int) -> list[list[int]]:
    M = identity_matrix(n)
    (a, b), (c, d) = _BLOCKS[kind]
    M[i - 1][i - 1], M[i - 1][i], M[i][i - 1], M[i][i] = a, b, c, d
    return M


def braid_matrix(w: VirtualBraidWord) -> list[list[int]]:
    """Integer matrix taking top colors to bottom colors (column vectors)."""
    M = identity_matrix(w.strands)
    for kind, i in w.letters:
        M = matmul(letter_matrix(w.strands, kind, i), M)
    return M


def nonzero_integer_coloring(w: VirtualBraidWord) -> list[int]:
    """A primitive nonzero integer vector fixed by ``braid_matrix(w)``."""
    M = braid_matrix(w)
    A = [[M[i][j] - (i == j) for j in range(w.strands)] for i in range(w.strands)]
    basis = integer_kernel(A, cols=w.strands)
    if not basis:
        raise ArithmeticError("braid matrix has no fixed vector")  # cannot happen
    return basis[0]


def braid_vector_coloring(w: VirtualBraidWord, top) -> list[int]:
    """Push integer colors ``top`` down the braid; return edge colors of the closure.

    Raises ValueError if the bottom colors do not match the top ones.
    """
    edges = braid_strand_edges(w)
    colors: dict[int, int] = {}
    cur = [int(x) for x in top]

    def record(level):
        for p, c in enumerate(cur):
            e = edges[level][p]
            if colors.setdefault(e, c) != c:
                raise ValueError("colors do not close up")

    for j, (kind, i) in enumerate(w.letters):
        record(j)
        x, y = cur[i - 1], cur[i]
        if kind == "s":
            cur[i - 1], cur[i] = -y, x + 2 * y
        elif kind == "S":
            cur[i - 1], cur[i] = 2 * x + y, -x
        else:
            cur[i - 1], cur[i] = y, x
    record(len(w.letters))
    return [colors[e] for e in range(len(colors))]
