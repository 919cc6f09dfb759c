"""
Oriented virtual link diagrams as signed Gauss codes.

Virtual crossings are never stored: a diagram is determined by the cyclic
order of classical passages along each component together with the
crossing signs.  An *edge* runs from one classical passage to the next.

Crossing geometry.  Rotate a crossing so that both strands point down.
At a positive crossing the under strand runs top-left -> bottom-right and
the over strand top-right -> bottom-left; at a negative crossing the over
strand runs top-left -> bottom-right.  With ``mirror=True`` the roles of
over and under are exchanged in both cases.  Every computation downstream
(colorings, Wada relators, Alexander numberings, cocycle weights) reads
crossings through the four positions ``tl, tr, bl, br``.

Text formats::

    O1+ U2+ O3+ U1+ O2+ U3+          Gauss code, components split by '/'
    n=2 s1 s1 v1                     virtual braid: s_i, S_i = s_i^-1, v_i
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import NamedTuple


class DiagramError(ValueError):
    """Malformed Gauss code or braid word."""


class Passage(NamedTuple):
    crossing: int
    layer: str  # "O" or "U"
    sign: int   # +1 or -1

    def __str__(self):
        return f"{self.layer}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    components: tuple

    def __post_init__(self):
        comps = tuple(tuple(Passage(*p) for p in c) for c in self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise DiagramError("a Gauss code needs at least one component")
        seen: dict[int, list[Passage]] = {}
        for comp in comps:
            for p in comp:
                if p.layer not in ("O", "U") or p.sign not in (1, -1):
                    raise DiagramError(f"bad passage {p!r}")
                seen.setdefault(p.crossing, []).append(p)
        for k, ps in sorted(seen.items()):
            if len(ps) == 1:
                missing = "under" if ps[0].layer == "O" else "over"
                raise DiagramError(f"crossing {k} has no {missing} passage")
            if len(ps) != 2:
                raise DiagramError(f"crossing {k} appears {len(ps)} time(s), expected 2")
            if {p.layer for p in ps} != {"O", "U"}:
                missing = "under" if ps[0].layer == "O" else "over"
                raise DiagramError(f"crossing {k} has no {missing} passage")
            if ps[0].sign != ps[1].sign:
                raise DiagramError(f"crossing {k} has inconsistent signs")

    @property
    def crossing_ids(self) -> list[int]:
        return sorted({p.crossing for c in self.components for p in c})

    def __str__(self):
        return " / ".join(" ".join(str(p) for p in c) for c in self.components)


_PASSAGE = re.compile(r"^([OU])(\d+)([+\-−])$")


def parse_gauss(text: str) -> GaussCode:
    """Parse ``"O1+ U2+ ..."``; ``/`` separates components, ``""`` is the unknot."""
    comps = []
    for chunk in text.split("/"):
        comp = []
        for tok in chunk.split():
            m = _PASSAGE.match(tok)
            if not m:
                raise DiagramError(f"bad Gauss token {tok!r}")
            comp.append(Passage(int(m.group(2)), m.group(1), 1 if m.group(3) == "+" else -1))
        comps.append(tuple(comp))
    return GaussCode(tuple(comps))


@dataclass(frozen=True)
class VirtualBraidWord:
    """Letters are ``(kind, i)`` with kind in ``s``, ``S`` (inverse), ``v``."""

    strands: int
    letters: tuple = ()

    def __post_init__(self):
        if self.strands < 1:
            raise DiagramError("a braid needs at least one strand")
        letters = tuple(tuple(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for kind, i in letters:
            if kind not in ("s", "S", "v"):
                raise DiagramError(f"bad braid letter {kind}{i}")
            if not 1 <= i < self.strands:
                raise DiagramError(f"letter {kind}{i} out of range for {self.strands} strands")

    def permutation(self) -> list[int]:
        """``perm[p]`` is the bottom position of the strand starting at top position p."""
        pos = list(range(self.strands))
        for _, i in self.letters:
            for p, q in enumerate(pos):
                if q == i - 1:
                    pos[p] = i
                elif q == i:
                    pos[p] = i - 1
        return pos

    def __str__(self):
        return " ".join([f"n={self.strands}"] + [f"{k}{i}" for k, i in self.letters])


_LETTER = re.compile(r"^([sSv])(\d+)$")


def parse_braid(text: str) -> VirtualBraidWord:
    """Parse ``"n=3 s1 S2 v1"``."""
    toks = text.split()
    if not toks or not toks[0].startswith("n="):
        raise DiagramError("braid text must start with n=<strands>")
    try:
        n = int(toks[0][2:])
    except ValueError:
        raise DiagramError(f"bad strand count {toks[0]!r}") from None
    letters = []
    for tok in toks[1:]:
        m = _LETTER.match(tok)
        if not m:
            raise DiagramError(f"bad braid token {tok!r}")
        letters.append((m.group(1), int(m.group(2))))
    return VirtualBraidWord(n, tuple(letters))


def _walk_closure(w: VirtualBraidWord):
    """Trace the closure of ``w`` one component at a time.

    Yields, per component, a list of ``(level, position, passage)`` where
    passage is None for a level at which the strand meets no classical
    crossing.  Level j sits just above letter j.  Classical crossings are
    numbered 1, 2, ... in word order.
    """
    crossing_no = {}
    for j, (kind, _) in enumerate(w.letters):
        if kind != "v":
            crossing_no[j] = len(crossing_no) + 1
    done = set()
    for start in range(w.strands):
        if start in done:
            continue
        trail = []
        p = start
        while True:
            done.add(p)
            for j, (kind, i) in enumerate(w.letters):
                here = None
                if p in (i - 1, i) and kind != "v":
                    left = p == i - 1
                    # positive: under strand enters top-left
                    under = left if kind == "s" else not left
                    here = Passage(crossing_no[j], "U" if under else "O",
                                   1 if kind == "s" else -1)
                trail.append((j, p, here))
                if p == i - 1:
                    p = i
                elif p == i:
                    p = i - 1
            if p == start:
                break
        yield trail


def close_braid(w: VirtualBraidWord) -> GaussCode:
    """Gauss code of the closure; components ordered by least top position."""
    comps = []
    for trail in _walk_closure(w):
        comps.append(tuple(p for _, _, p in trail if p is not None))
    return GaussCode(tuple(comps))


def braid_strand_edges(w: VirtualBraidWord) -> list[list[int]]:
    """Edge id of ``build_diagram(close_braid(w))`` at each (level, position).

    ``result[j][p]`` is the edge carrying position p just above letter j;
    row ``len(w.letters)`` is the bottom of the braid (equal to row 0).
    """
    L = len(w.letters)
    if L == 0:
        return [list(range(w.strands))]
    table = [[-1] * w.strands for _ in range(L + 1)]
    base = 0
    for trail in _walk_closure(w):
        npass = sum(1 for _, _, p in trail if p is not None)
        # edge k leaves passage k; before the first passage we are on the
        # edge leaving the component's last passage
        k = base + npass - 1 if npass else base
        for j, p, passage in trail:
            table[j][p] = k
            if passage is not None:
                k = base + (k - base + 1) % npass
        base += max(npass, 1)
    table[L] = list(table[0])
    return table


def random_braid_word(rng, max_strands: int = 4, max_length: int = 12,
                      knot: bool = False) -> VirtualBraidWord:
    """A random virtual braid word drawn from ``rng`` (a `random.Random`).

    With ``knot=True`` words are redrawn until the closure has one component.
    """
    while True:
        n = rng.randint(1, max_strands)
        length = rng.randint(0, max_length) if n > 1 else 0
        letters = tuple((rng.choice("sSv"), rng.randint(1, n - 1)) for _ in range(length))
        w = VirtualBraidWord(n, letters)
        if not knot or _cycle_count(w.permutation()) == 1:
            return w


def _cycle_count(perm) -> int:
    seen, count = set(), 0
    for p in range(len(perm)):
        if p not in seen:
            count += 1
            while p not in seen:
                seen.add(p)
                p = perm[p]
    return count


# ---------------------------------------------------------------------------
# Diagrams


@dataclass(frozen=True)
class Crossing:
    sign: int
    over_in: int
    over_out: int
    under_in: int
    under_out: int
    mirror: bool = False

    def _layers(self):
        o = (self.over_in, self.over_out)
        u = (self.under_in, self.under_out)
        # (strand running tl -> br, strand running tr -> bl)
        if (self.sign > 0) != self.mirror:
            return u, o
        return o, u

    @property
    def tl(self):
        return self._layers()[0][0]

    @property
    def br(self):
        return self._layers()[0][1]

    @property
    def tr(self):
        return self._layers()[1][0]

    @property
    def bl(self):
        return self._layers()[1][1]

    def relation(self) -> tuple[int, int, int, int]:
        """Edges ``(a1, a2, a3, a4)`` with R(a1, a2) = (a3, a4).

        Positive: top pair maps to bottom pair.  Negative: bottom pair maps
        to top pair.
        """
        if self.sign > 0:
            return self.tl, self.tr, self.bl, self.br
        return self.bl, self.br, self.tl, self.tr


@dataclass(frozen=True)
class Diagram:
    """Edge/crossing incidence structure of a virtual link diagram.

    Edge ``k`` is the edge leaving the k-th passage (passages counted
    component by component); a crossing-free component is a single edge.
    ``edge_ends[k] = (tail, head)`` where each end is ``(crossing index,
    slot name)`` or None for the synthetic ends of a closed edge.
    """

    crossings: tuple
    num_edges: int
    components: int
    component_edges: tuple = field(repr=False)
    edge_ends: tuple = field(repr=False)
    code: GaussCode | None = field(default=None, repr=False, compare=False)
    mirror: bool = False

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    def relations(self):
        """``(sign, a1, a2, a3, a4)`` for every crossing."""
        return [(c.sign,) + c.relation() for c in self.crossings]

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dict(self) -> dict:
        return {
            "crossings": [{"sign": c.sign, "over_in": c.over_in, "over_out": c.over_out,
                           "under_in": c.under_in, "under_out": c.under_out}
                          for c in self.crossings],
            "edges": self.num_edges,
            "components": self.components,
        }


def build_diagram(g: GaussCode, mirror: bool = False) -> Diagram:
    ids = g.crossing_ids
    index = {k: i for i, k in enumerate(ids)}
    slots = [dict() for _ in ids]
    signs = [0] * len(ids)
    ends: list[list] = []
    comp_edges = []
    base = 0
    for comp in g.components:
        n = len(comp)
        if n == 0:
            ends.append([None, None])
            comp_edges.append((base,))
            base += 1
            continue
        for j, p in enumerate(comp):
            c = index[p.crossing]
            signs[c] = p.sign
            layer = "over" if p.layer == "O" else "under"
            out_edge = base + j
            in_edge = base + (j - 1) % n
            slots[c][layer + "_out"] = out_edge
            slots[c][layer + "_in"] = in_edge
        for j, p in enumerate(comp):
            nxt = comp[(j + 1) % n]
            lt = "over" if p.layer == "O" else "under"
            lh = "over" if nxt.layer == "O" else "under"
            ends.append([(index[p.crossing], lt + "_out"), (index[nxt.crossing], lh + "_in")])
        comp_edges.append(tuple(range(base, base + n)))
        base += n
    crossings = tuple(Crossing(signs[i], mirror=mirror, **slots[i]) for i in range(len(ids)))
    return Diagram(crossings=crossings, num_edges=base, components=len(g.components),
                   component_edges=tuple(comp_edges),
                   edge_ends=tuple(tuple(e) for e in ends), code=g, mirror=mirror)


def diagram_from_text(text: str, mirror: bool = False) -> Diagram:
    """Build a diagram from either a braid (``n=...``) or a Gauss code."""
    text = text.strip()
    if text.startswith("n="):
        return build_diagram(close_braid(parse_braid(text)), mirror=mirror)
    return build_diagram(parse_gauss(text), mirror=mirror)
