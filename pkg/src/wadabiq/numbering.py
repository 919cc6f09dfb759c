"""
Alexander numberings, the cocycle obstruction to checkerboard
colorability, and spans of colorings by the infinite abelian Wada
biquandle Z.

With a crossing turned so both strands point down, an Alexander
numbering gives the two left edges (tl, bl) a common value i and the two
right edges (tr, br) the value i + 1.  These are difference constraints,
so a numbering is found by walking the constraint graph; the mod-2
version works the same way in Z_2.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .algebra import integer_kernel, solve_mod
from .biquandle import abelian_wada
from .cocycle import additive
from .coloring import enumerate_colorings
from .diagram import Diagram


def alexander_constraints(d: Diagram) -> list[tuple[int, int, int]]:
    """``(e, f, k)`` meaning A(f) = A(e) + k."""
    out = []
    for c in d.crossings:
        out += [(c.tl, c.bl, 0), (c.tl, c.tr, 1), (c.tl, c.br, 1)]
    return out


def _solve_differences(n_vars, constraints, modulus):
    adj = [[] for _ in range(n_vars)]
    for e, f, k in constraints:
        adj[e].append((f, k))
        adj[f].append((e, -k))
    val = [None] * n_vars
    for root in range(n_vars):
        if val[root] is not None:
            continue
        val[root] = 0
        queue = deque([root])
        while queue:
            e = queue.popleft()
            for f, k in adj[e]:
                want = val[e] + k
                if modulus:
                    want %= modulus
                if val[f] is None:
                    val[f] = want
                    queue.append(f)
                elif val[f] != want:
                    return None
    return val


def _is_numbering(d, A, modulus):
    def red(x):
        return x % modulus if modulus else x
    return all(red(A[f] - A[e] - k) == 0 for e, f, k in alexander_constraints(d))


def mod2_numbering(d: Diagram) -> list[int] | None:
    """A mod-2 Alexander numbering of this diagram, or None."""
    return _solve_differences(d.num_edges, alexander_constraints(d), 2)


def integer_numbering(d: Diagram) -> list[int] | None:
    """An integer Alexander numbering of this diagram, or None."""
    return _solve_differences(d.num_edges, alexander_constraints(d), None)


def is_mod2_numbering(d: Diagram, A) -> bool:
    return len(A) == d.num_edges and _is_numbering(d, A, 2)


def is_integer_numbering(d: Diagram, A) -> bool:
    return len(A) == d.num_edges and _is_numbering(d, A, None)


# ---------------------------------------------------------------------------
# colorings by Z and Z_n as linear systems


def coloring_system(d: Diagram) -> list[list[int]]:
    """Rows a3 + a2 = 0 and a4 - a1 - 2 a2 = 0 for each crossing."""
    rows = []
    for _, a1, a2, a3, a4 in d.relations():
        r = [0] * d.num_edges
        r[a3] += 1
        r[a2] += 1
        rows.append(r)
        r = [0] * d.num_edges
        r[a4] += 1
        r[a1] -= 1
        r[a2] -= 2
        rows.append(r)
    return rows


def cyclic_count(d: Diagram, n: int) -> int:
    """Colorings by the abelian Wada biquandle Z_n, counted by linear algebra."""
    return solve_mod(coloring_system(d), n, cols=d.num_edges).count


def coloring_lattice(d: Diagram) -> list[list[int]]:
    """Basis of the lattice of colorings by Z (LLL-reduced)."""
    return integer_kernel(coloring_system(d), cols=d.num_edges)


def integer_weight(d: Diagram, colors, f=additive) -> int:
    return sum(s * f(colors[a1], colors[a2]) for s, a1, a2, _, _ in d.relations())


# ---------------------------------------------------------------------------
# obstruction


@dataclass
class ObstructionReport:
    """``obstructed`` means some coloring has nonzero additive-cocycle weight,
    which rules out checkerboard colorability for every diagram of the link.
    ``diagram_numbering`` only says whether *this* diagram has a mod-2
    Alexander numbering."""

    n: int
    obstructed: bool
    witness: tuple | None
    weight: int
    diagram_numbering: bool


def checkerboard_obstruction(d: Diagram, n: int) -> ObstructionReport:
    """Search for a coloring by Z_n (n odd >= 3) or Z (n = 0) of nonzero weight."""
    if n != 0 and (n < 3 or n % 2 == 0):
        raise ValueError("n must be odd and >= 3, or 0 for Z")
    has_num = mod2_numbering(d) is not None
    if n == 0:
        for v in coloring_lattice(d):
            w = integer_weight(d, v)
            if w:
                return ObstructionReport(0, True, tuple(v), w, has_num)
        return ObstructionReport(0, False, None, 0, has_num)
    for colors in enumerate_colorings(d, abelian_wada(n)):
        w = integer_weight(d, colors) % n
        if w:
            return ObstructionReport(n, True, colors, w, has_num)
    return ObstructionReport(n, False, None, 0, has_num)


# ---------------------------------------------------------------------------
# span


@dataclass
class SpanReport:
    basis: list
    span: int | None
    witness: tuple | None
    bound: int
    proof_bound: int | None
    exact: bool


def _span(v) -> int:
    return max(v) - min(v)


def coefficient_bound(basis, span: int) -> int:
    """Bound on |coefficients| of any lattice vector of span <= ``span``.

    Each coefficient is maximised by a linear program over
    ``t <= sum c_i b_i <= t + span``; the feasible region is bounded
    because no nonzero constant vector is a coloring once the diagram
    has a crossing.
    """
    B = np.array(basis, dtype=float).T  # edges x rank
    n_e, r = B.shape
    A_ub = np.vstack([np.hstack([B, -np.ones((n_e, 1))]),
                      np.hstack([-B, np.ones((n_e, 1))])])
    b_ub = np.concatenate([np.full(n_e, float(span)), np.zeros(n_e)])
    best = 0.0
    for i in range(r):
        cost = np.zeros(r + 1)
        cost[i] = -1.0
        res = linprog(cost, A_ub=A_ub, b_ub=b_ub, bounds=[(None, None)] * (r + 1),
                      method="highs")
        if res.status != 0:
            raise ArithmeticError("span region is unbounded")
        best = max(best, -res.fun)
    return int(np.floor(best + 1e-7))


def min_span(d: Diagram, bound: int = 10) -> SpanReport:
    """Least span of a nonzero Z-coloring with basis coefficients in [-bound, bound].

    ``exact`` is set when `coefficient_bound` shows that every lattice
    vector of span at most the reported one lies inside the search box.
    """
    basis = coloring_lattice(d)
    if not basis:
        return SpanReport(basis, None, None, bound, None, False)
    if d.num_crossings == 0:
        v = (1,) * d.num_edges
        return SpanReport(basis, 0, v, bound, 0, True)
    r = len(basis)
    best = None
    for c in itertools.product(range(-bound, bound + 1), repeat=r):
        nz = next((x for x in c if x), 0)
        if nz <= 0:  # skip zero and one of each +- pair
            continue
        v = tuple(sum(ci * b[e] for ci, b in zip(c, basis)) for e in range(d.num_edges))
        s = _span(v)
        if best is None or s < best[0]:
            best = (s, v)
    proof = coefficient_bound(basis, best[0])
    return SpanReport(basis, best[0], best[1], bound, proof, proof <= bound)
