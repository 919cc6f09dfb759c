"""
Colorings of diagram edges by a finite biquandle, and Fox colorings.

A coloring assigns an element to every edge so that R(a1, a2) = (a3, a4)
at each crossing, with ``(a1, a2, a3, a4)`` read from
`Diagram.relations`.  The search colors one edge, then propagates
through crossings: whenever the known edges of a crossing admit a
single completion the rest are forced, and when they admit none the
branch dies.  With two edges known this covers R, Rbar and the
one-sided inverses; partial information can force values too (for W1,
a3 alone fixes a2).  When propagation stalls the search branches on
the edge with the fewest surviving candidate colors.
"""

from __future__ import annotations

from typing import Iterator

from .algebra import solve_mod
from .biquandle import Biquandle
from .diagram import Diagram


class _Search:
    def __init__(self, d: Diagram, b: Biquandle):
        self.n = d.num_edges
        self.m = b.size
        self.rels = [r[1:] for r in d.relations()]
        # positions sharing an edge, e.g. a kink wires a1 to a4
        self.ties = [[(i, j) for i in range(4) for j in range(i + 1, 4) if rel[i] == rel[j]]
                     for rel in self.rels]
        self.touch = [[] for _ in range(self.n)]
        for k, rel in enumerate(self.rels):
            for e in set(rel):
                self.touch[e].append(k)
        self.index = b.completions()
        self.col = [-1] * self.n

    def _options(self, k):
        """Completions of crossing ``k`` consistent with the current colors."""
        col = self.col
        rel = self.rels[k]
        mask, key = 0, []
        for i, e in enumerate(rel):
            v = col[e]
            if v >= 0:
                mask |= 1 << i
                key.append(v)
        if not mask:
            return mask, None
        opts = self.index[mask].get(tuple(key), ())
        if self.ties[k]:
            opts = [t for t in opts if all(t[i] == t[j] for i, j in self.ties[k])]
        return mask, opts

    def _set(self, e, v, trail, queue):
        c = self.col[e]
        if c < 0:
            self.col[e] = v
            trail.append(e)
            queue.append(e)
            return True
        return c == v

    def propagate(self, e, trail) -> bool:
        queue = [e]
        while queue:
            x = queue.pop()
            for k in self.touch[x]:
                _, opts = self._options(k)
                if not opts:
                    return False
                if len(opts) == 1:
                    t = opts[0]
                    for pos, f in enumerate(self.rels[k]):
                        if not self._set(f, t[pos], trail, queue):
                            return False
        return True

    def _undo(self, trail):
        for e in trail:
            self.col[e] = -1

    def _branch(self):
        """Uncolored edge with the fewest candidates, and those candidates."""
        best = None
        for k, rel in enumerate(self.rels):
            mask, opts = self._options(k)
            if mask in (0, 15):
                continue
            for pos, e in enumerate(rel):
                if self.col[e] < 0:
                    cand = sorted({t[pos] for t in opts})
                    if best is None or len(cand) < len(best[1]):
                        best = (e, cand)
        if best is not None:
            return best
        e = next((i for i in range(self.n) if self.col[i] < 0), None)
        return None if e is None else (e, range(self.m))

    def solutions(self) -> Iterator[list]:
        pick = self._branch()
        if pick is None:
            yield list(self.col)
            return
        e, cand = pick
        for v in cand:
            trail = [e]
            self.col[e] = v
            if self.propagate(e, trail):
                yield from self.solutions()
            self._undo(trail)

    def count(self) -> int:
        pick = self._branch()
        if pick is None:
            return 1
        e, cand = pick
        total = 0
        for v in cand:
            trail = [e]
            self.col[e] = v
            if self.propagate(e, trail):
                total += self.count()
            self._undo(trail)
        return total


def count_colorings(d: Diagram, b: Biquandle) -> int:
    """Number of colorings of ``d`` by ``b``."""
    return _Search(d, b).count()


def enumerate_colorings(d: Diagram, b: Biquandle, limit: int | None = None) -> Iterator[tuple]:
    """Yield colorings as tuples indexed by edge id.

    Branch edges are tried in increasing color order, so the sequence
    is deterministic.
    """
    if limit is not None and limit <= 0:
        return
    for k, sol in enumerate(_Search(d, b).solutions(), start=1):
        yield tuple(sol)
        if limit is not None and k >= limit:
            return


def is_coloring(d: Diagram, b: Biquandle, colors) -> bool:
    return all(b.R(colors[a1], colors[a2]) == (colors[a3], colors[a4])
               for _, a1, a2, a3, a4 in d.relations())


def is_cyclic_coloring(d: Diagram, colors, n: int = 0) -> bool:
    """Check a coloring by the abelian Wada biquandle Z_n (n = 0 means Z)."""
    def red(x):
        return x % n if n else x
    return all(red(colors[a3] + colors[a2]) == 0 and red(colors[a4] - colors[a1] - 2 * colors[a2]) == 0
               for _, a1, a2, a3, a4 in d.relations())


# ---------------------------------------------------------------------------
# Fox colorings


def fox_system(d: Diagram) -> list[list[int]]:
    """Rows of the linear Fox coloring system on edges."""
    rows = []
    for c in d.crossings:
        r = [0] * d.num_edges
        r[c.over_in] += 1
        r[c.over_out] -= 1
        rows.append(r)
        r = [0] * d.num_edges
        r[c.under_out] += 1
        r[c.under_in] += 1
        r[c.over_in] -= 2
        rows.append(r)
    return rows


def fox_count(d: Diagram, n: int) -> int:
    return solve_mod(fox_system(d), n, cols=d.num_edges).count


def enumerate_fox(d: Diagram, n: int) -> list[tuple]:
    return sorted(solve_mod(fox_system(d), n, cols=d.num_edges))


def is_fox_coloring(d: Diagram, colors, n: int) -> bool:
    return all((colors[c.over_in] - colors[c.over_out]) % n == 0
               and (colors[c.under_out] + colors[c.under_in] - 2 * colors[c.over_in]) % n == 0
               for c in d.crossings)


def fox_correspondence(d: Diagram, numbering, colors, n: int) -> tuple:
    """Send a Z_n coloring to the Fox coloring (-1)^L(e) * c(e).

    ``numbering`` must be a mod-2 Alexander numbering of ``d``.
    """
    from .numbering import is_mod2_numbering

    if numbering is None or not is_mod2_numbering(d, numbering):
        raise ValueError("diagram needs a valid mod-2 Alexander numbering")
    return tuple((-c if numbering[e] % 2 else c) % n for e, c in enumerate(colors))
