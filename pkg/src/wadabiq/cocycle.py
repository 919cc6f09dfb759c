"""
Yang-Baxter cochains in degrees 1 and 2, explicit 2-cocycles for the
abelian Wada biquandle, second cohomology ranks over prime fields and the
state-sum invariant.

Coefficients are Z_n (``modulus=n``) or Z (``modulus=None``).  The
coefficient group is written additively throughout; the state sum is
rendered in the group ring with a formal variable t, so a coloring of
total weight w contributes t^w.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .algebra import rank_mod_p
from .biquandle import Biquandle
from .coloring import enumerate_colorings, is_coloring, is_cyclic_coloring
from .diagram import Diagram


def _reduce(values, modulus):
    return values % modulus if modulus else values


@dataclass(eq=False)
class Cochain1:
    values: np.ndarray
    modulus: int | None = None

    def __post_init__(self):
        self.values = _reduce(np.asarray(self.values, dtype=np.int64), self.modulus)

    def __call__(self, x):
        return int(self.values[x])


@dataclass(eq=False)
class Cochain2:
    """A function X^2 -> A stored as an m x m table."""

    values: np.ndarray
    modulus: int | None = None
    name: str = "f"

    def __post_init__(self):
        self.values = _reduce(np.asarray(self.values, dtype=np.int64), self.modulus)

    def __call__(self, x, y):
        return int(self.values[x, y])

    def __eq__(self, other):
        return (isinstance(other, Cochain2) and self.modulus == other.modulus
                and np.array_equal(self.values, other.values))


def delta1(g: Cochain1, b: Biquandle) -> Cochain2:
    """(d g)(x, y) = g(x) + g(y) - g(R1(x, y)) - g(R2(x, y))."""
    gv = g.values
    m = b.size
    x, y = np.meshgrid(np.arange(m), np.arange(m), indexing="ij")
    return Cochain2(gv[x] + gv[y] - gv[b.r1] - gv[b.r2], g.modulus, name="d1g")


def delta2(f: Cochain2, b: Biquandle) -> np.ndarray:
    """The m x m x m table of (d f)(x, y, z)."""
    F, r1, r2 = f.values, b.r1, b.r2
    m = b.size
    x, y, z = np.meshgrid(np.arange(m), np.arange(m), np.arange(m), indexing="ij")
    r2xy = r2[x, y]
    r1yz = r1[y, z]
    out = (F[x, y] + F[r2xy, z] + F[r1[x, y], r1[r2xy, z]]
           - F[y, z] - F[x, r1yz] - F[r2[x, r1yz], r2[y, z]])
    return _reduce(out, f.modulus)


def is_cocycle(f: Cochain2, b: Biquandle) -> bool:
    return not delta2(f, b).any()


def satisfies_type_one(f: Cochain2, b: Biquandle) -> bool:
    """f(x_a, a) = 0 and f(a, y_a) = 0 for every a."""
    if not b.is_biquandle:
        raise ValueError(f"{b.name} does not satisfy the type I condition")
    return all(f(b.xa[a], a) == 0 and f(a, b.ya[a]) == 0 for a in range(b.size))


def additive_cocycle(n: int) -> Cochain2:
    """f(x, y) = x + y on Z_n with values in Z_n."""
    x, y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return Cochain2(x + y, n, name="x+y")


def additive(x: int, y: int) -> int:
    """The additive cocycle over Z."""
    return x + y


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def mochizuki_cocycle(p: int) -> Cochain2:
    """h(x, y) = ((x^p + 2 y^p) - (x + 2y)^p) / p reduced mod p.

    x and y run over the representatives 0..p-1; the numerator is
    divided exactly in Z before reduction.
    """
    if p % 2 == 0 or not _is_prime(p):
        raise ValueError("mochizuki_cocycle needs an odd prime")
    table = np.empty((p, p), dtype=np.int64)
    for x in range(p):
        for y in range(p):
            num = x ** p + 2 * y ** p - (x + 2 * y) ** p
            q, r = divmod(num, p)
            assert r == 0
            table[x, y] = q % p
    return Cochain2(table, p, name="mochizuki")


# ---------------------------------------------------------------------------
# chains


def boundary2(x: int, y: int, b: Biquandle) -> Counter:
    """{x} + {y} - {R1(x, y)} - {R2(x, y)} as element -> coefficient."""
    c = Counter()
    r1, r2 = b.R(x, y)
    for e, s in ((x, 1), (y, 1), (r1, -1), (r2, -1)):
        c[e] += s
    return Counter({e: k for e, k in c.items() if k})


def chain_boundary(chain: dict, b: Biquandle, modulus: int | None = None) -> Counter:
    total = Counter()
    for (x, y), k in chain.items():
        for e, s in boundary2(x, y, b).items():
            total[e] += k * s
    return Counter({e: v for e, v in total.items() if (v % modulus if modulus else v)})


def is_cycle(chain: dict, b: Biquandle, modulus: int | None = None) -> bool:
    return not chain_boundary(chain, b, modulus)


def evaluate(f: Cochain2, chain: dict) -> int:
    total = sum(k * f(x, y) for (x, y), k in chain.items())
    return total % f.modulus if f.modulus else total


# ---------------------------------------------------------------------------
# cohomology over a prime field


def delta1_matrix(b: Biquandle) -> list[list[int]]:
    """Matrix of d1 : A^X -> A^(X^2); row x*m + y, column element."""
    m = b.size
    M = np.zeros((m * m, m), dtype=np.int64)
    rows = np.arange(m * m)
    x, y = np.divmod(rows, m)
    for cols, s in ((x, 1), (y, 1), (b.r1.ravel(), -1), (b.r2.ravel(), -1)):
        np.add.at(M, (rows, cols), s)
    return M.tolist()


def delta2_matrix(b: Biquandle) -> list[list[int]]:
    """Matrix of d2 : A^(X^2) -> A^(X^3); column x*m + y."""
    m = b.size
    r1, r2 = b.r1, b.r2
    x, y, z = (a.ravel() for a in np.meshgrid(np.arange(m), np.arange(m), np.arange(m),
                                               indexing="ij"))
    rows = np.arange(m ** 3)
    r2xy = r2[x, y]
    r1yz = r1[y, z]
    terms = [((x, y), 1), ((r2xy, z), 1), ((r1[x, y], r1[r2xy, z]), 1),
             ((y, z), -1), ((x, r1yz), -1), ((r2[x, r1yz], r2[y, z]), -1)]
    M = np.zeros((m ** 3, m * m), dtype=np.int64)
    for (a, c), s in terms:
        np.add.at(M, (rows, a * m + c), s)
    return M.tolist()


def h2_rank(b: Biquandle, p: int) -> int:
    """dim ker d2 - dim im d1 with coefficients in GF(p)."""
    if not _is_prime(p):
        raise ValueError("h2_rank needs a prime")
    m = b.size
    return m * m - rank_mod_p(delta2_matrix(b), p) - rank_mod_p(delta1_matrix(b), p)


def independent_mod_coboundaries(cochains, b: Biquandle, p: int) -> bool:
    """True if the cochains are linearly independent modulo im d1 over GF(p)."""
    D1 = delta1_matrix(b)
    rank1 = rank_mod_p(D1, p)
    cols = [np.asarray(f.values).ravel().tolist() for f in cochains]
    aug = [row + [c[i] for c in cols] for i, row in enumerate(D1)]
    return rank_mod_p(aug, p) == rank1 + len(cochains)


# ---------------------------------------------------------------------------
# state sums


@dataclass
class GroupRingElement:
    """Sum of c_k t^k in Z[A]; exponents are residues mod ``modulus`` or integers."""

    terms: Counter = field(default_factory=Counter)
    modulus: int | None = None

    def add(self, exponent: int, mult: int = 1):
        if self.modulus:
            exponent %= self.modulus
        self.terms[exponent] += mult

    @property
    def augmentation(self) -> int:
        return sum(self.terms.values())

    def is_trivial(self) -> bool:
        """Every state has weight 0."""
        return all(k == 0 for k, c in self.terms.items() if c)

    def as_dict(self) -> dict:
        return {int(k): int(c) for k, c in sorted(self.terms.items()) if c}

    def __eq__(self, other):
        return (isinstance(other, GroupRingElement) and self.modulus == other.modulus
                and self.as_dict() == other.as_dict())

    def __str__(self):
        parts = []
        for k, c in self.as_dict().items():
            if k == 0:
                parts.append(str(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        s = " + ".join(parts) if parts else "0"
        return s + (f" (mod {self.modulus})" if self.modulus else "")


def per_coloring_weight(d: Diagram, b: Biquandle | None, f, colors) -> int:
    """Sum over crossings of sign * f(a1, a2) for one coloring.

    With ``b=None`` the colors are integers and must form a coloring by
    the abelian Wada biquandle Z; ``f`` is then any callable on integers.
    """
    if b is None:
        ok = is_cyclic_coloring(d, colors, 0)
    else:
        ok = is_coloring(d, b, colors)
    if not ok:
        raise ValueError("not a valid coloring")
    total = sum(sign * f(colors[a1], colors[a2]) for sign, a1, a2, _, _ in d.relations())
    modulus = getattr(f, "modulus", None)
    return total % modulus if modulus else total


def state_sum(d: Diagram, b: Biquandle, f: Cochain2) -> GroupRingElement:
    """Sum over colorings of t^(total weight).

    Warns when f is not a type I 2-cocycle, since the result is then not
    an invariant.
    """
    if not (is_cocycle(f, b) and b.is_biquandle and satisfies_type_one(f, b)):
        warnings.warn(f"{f.name} is not a type I 2-cocycle of {b.name}; "
                      "the state sum need not be invariant", stacklevel=2)
    rels = [(s, a1, a2) for s, a1, a2, _, _ in d.relations()]
    F = f.values.tolist()
    phi = GroupRingElement(modulus=f.modulus)
    for colors in enumerate_colorings(d, b):
        phi.add(sum(s * F[colors[a1]][colors[a2]] for s, a1, a2 in rels))
    return phi
