"""
Biracks and biquandles on finite sets, in particular the group biquandles
obtained from a pair of Wada words.

A birack is a map R(a, b) = (R1(a, b), R2(a, b)) on pairs that is
invertible, has R1 left-invertible and R2 right-invertible, and solves
the set-theoretic Yang-Baxter equation.  It is a biquandle when the
type I fixpoints x_a, y_a exist and are unique.  All axioms are checked
exhaustively when a `Biquandle` is built.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .algebra import FiniteGroup, FreeWord, eval_word


class AxiomError(ValueError):
    """A birack axiom fails; ``witness`` is a concrete counterexample."""

    def __init__(self, axiom: str, witness, message: str = ""):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or f"{axiom} fails at {witness}")


@dataclass(frozen=True)
class WadaPair:
    name: str
    u: FreeWord
    v: FreeWord

    @classmethod
    def custom(cls, u: str, v: str, name: str = "Custom") -> "WadaPair":
        return cls(name, FreeWord.parse(u), FreeWord.parse(v))


W1 = WadaPair("W1", FreeWord.parse("y^-1"), FreeWord.parse("y x y"))
W2 = WadaPair("W2", FreeWord.parse("x^-1 y^-1 x"), FreeWord.parse("y^2 x"))
CORE = WadaPair("Core", FreeWord.parse("y"), FreeWord.parse("y x^-1 y"))
WADA_PAIRS = {"w1": W1, "w2": W2, "core": CORE}


class Biquandle:
    """Finite birack given by tables ``r1[a, b]`` and ``r2[a, b]``.

    Derived tables (all numpy arrays, with list mirrors for fast scalar
    lookups in the coloring search):

    ``rbar1, rbar2``   inverse map, R(rbar1[c, d], rbar2[c, d]) = (c, d)
    ``linv1[a1, a3]``  the unique a2 with R1(a1, a2) = a3
    ``rinv2[a2, a4]``  the unique a1 with R2(a1, a2) = a4
    ``xa, ya``         type I fixpoints, or None when type I fails

    Raises `AxiomError` if a birack axiom fails.  ``check_ybe=False``
    skips the O(m^3) Yang-Baxter sweep for large carriers.
    """

    def __init__(self, r1, r2, name: str = "X", check_ybe: bool = True):
        r1 = np.asarray(r1, dtype=np.int64)
        r2 = np.asarray(r2, dtype=np.int64)
        m = r1.shape[0]
        if r1.shape != (m, m) or r2.shape != (m, m):
            raise ValueError("R tables must be square and of equal size")
        if min(r1.min(), r2.min()) < 0 or max(r1.max(), r2.max()) >= m:
            raise ValueError("R table entries out of range")
        self.name = name
        self.size = m
        self.r1, self.r2 = r1, r2

        codes = (r1 * m + r2).ravel()
        if len(np.unique(codes)) != m * m:
            vals, first = np.unique(codes, return_index=True)
            dup = next(i for i in range(m * m) if i not in set(first.tolist()))
            raise AxiomError("invertibility", divmod(dup, m), "R is not a bijection on pairs")
        inv = np.empty(m * m, dtype=np.int64)
        inv[codes] = np.arange(m * m)
        self.rbar1 = (inv // m).reshape(m, m)
        self.rbar2 = (inv % m).reshape(m, m)

        self.linv1 = np.empty((m, m), dtype=np.int64)
        for a1 in range(m):
            row = r1[a1]
            if len(np.unique(row)) != m:
                a3 = next(int(c) for c in range(m) if (row == c).sum() != 1)
                raise AxiomError("left-invertibility of R1", (a1, a3),
                                 f"no unique A2 with R1({a1}, A2) = {a3}")
            self.linv1[a1, row] = np.arange(m)
        self.rinv2 = np.empty((m, m), dtype=np.int64)
        for a2 in range(m):
            col = r2[:, a2]
            if len(np.unique(col)) != m:
                a4 = next(int(c) for c in range(m) if (col == c).sum() != 1)
                raise AxiomError("right-invertibility of R2", (a2, a4),
                                 f"no unique A1 with R2(A1, {a2}) = {a4}")
            self.rinv2[a2, col] = np.arange(m)

        if check_ybe:
            ok, witness = ybe_check(self)
            if not ok:
                raise AxiomError("Yang-Baxter equation", witness)

        self.xa, self.ya = self._type_one()
        self.lists = {k: getattr(self, k).tolist()
                      for k in ("r1", "r2", "rbar1", "rbar2", "linv1", "rinv2")}
        self._completions = None

    def _type_one(self):
        m = self.size
        idx = np.arange(m)
        xa, ya = [], []
        for a in range(m):
            xs = np.flatnonzero((self.r1[:, a] == idx) & (self.r2[:, a] == a))
            ys = np.flatnonzero((self.r2[a, :] == idx) & (self.r1[a, :] == a))
            if len(xs) != 1 or len(ys) != 1:
                return None, None
            xa.append(int(xs[0]))
            ya.append(int(ys[0]))
        return xa, ya

    def completions(self) -> list[dict]:
        """``completions()[mask][known]``: all tuples (a1, a2, R(a1, a2)) agreeing
        with the values ``known`` at the positions set in the 4-bit ``mask``."""
        if self._completions is None:
            r1, r2 = self.lists["r1"], self.lists["r2"]
            rows = [(a, c, r1[a][c], r2[a][c]) for a in range(self.size) for c in range(self.size)]
            index: list[dict] = [{} for _ in range(16)]
            for mask in range(1, 16):
                pos = [i for i in range(4) if mask >> i & 1]
                table = index[mask]
                for t in rows:
                    table.setdefault(tuple(t[i] for i in pos), []).append(t)
            self._completions = index
        return self._completions

    @property
    def is_biquandle(self) -> bool:
        return self.xa is not None

    def R(self, a: int, b: int) -> tuple[int, int]:
        return int(self.r1[a, b]), int(self.r2[a, b])

    def Rbar(self, c: int, d: int) -> tuple[int, int]:
        return int(self.rbar1[c, d]), int(self.rbar2[c, d])

    def __len__(self):
        return self.size

    def __repr__(self):
        kind = "biquandle" if self.is_biquandle else "birack"
        return f"<{kind} {self.name} of order {self.size}>"

    def to_json(self) -> str:
        return json.dumps({"name": self.name, "r1": self.r1.tolist(), "r2": self.r2.tolist()})

    @classmethod
    def from_json(cls, text: str) -> "Biquandle":
        d = json.loads(text)
        return cls(d["r1"], d["r2"], name=d.get("name", "X"))


def ybe_check(b: Biquandle):
    """Exhaustive Yang-Baxter check; returns ``(ok, first failing triple)``."""
    return ybe_tables(b.r1, b.r2)


def ybe_tables(r1, r2):
    """`ybe_check` on bare tables, which need not define a birack."""
    r1 = np.asarray(r1, dtype=np.int64)
    r2 = np.asarray(r2, dtype=np.int64)
    m = r1.shape[0]
    x, y, z = np.meshgrid(np.arange(m), np.arange(m), np.arange(m), indexing="ij")

    # (R x 1)(1 x R)(R x 1), applied right to left
    a, c = r1[x, y], r2[x, y]
    c2, z1 = r1[c, z], r2[c, z]
    lhs = (r1[a, c2], r2[a, c2], z1)
    # (1 x R)(R x 1)(1 x R)
    c, z1 = r1[y, z], r2[y, z]
    x1, c2 = r1[x, c], r2[x, c]
    rhs = (x1, r1[c2, z1], r2[c2, z1])

    bad = np.zeros_like(x, dtype=bool)
    for l, r in zip(lhs, rhs):
        bad |= l != r
    hits = np.argwhere(bad)
    if len(hits):
        return False, tuple(int(t) for t in hits[0])
    return True, None


def _wada_tables(pair: WadaPair, G: FiniteGroup):
    X, Y = np.meshgrid(np.arange(G.order), np.arange(G.order), indexing="ij")
    return eval_word(pair.u, X, Y, G), eval_word(pair.v, X, Y, G)


def from_wada(pair: WadaPair | str, G: FiniteGroup, check_ybe: bool = True) -> Biquandle:
    """Group birack R(x, y) = (u(x, y), v(x, y)) on the elements of G.

    ``pair`` may also be one of the names ``"W1"``, ``"W2"``, ``"Core"``.
    """
    if isinstance(pair, str):
        pair = WADA_PAIRS[pair.lower()]
    r1, r2 = _wada_tables(pair, G)
    return Biquandle(r1, r2, name=f"{pair.name}({G.name})", check_ybe=check_ybe)


def abelian_wada(n: int) -> Biquandle:
    """R(x, y) = (-y, 2y + x) on Z_n."""
    if n < 2:
        raise ValueError("abelian_wada needs n >= 2")
    x, y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return Biquandle((-y) % n, (2 * y + x) % n, name=f"Z{n}")


@dataclass
class WadaReport:
    T: bool
    M: bool
    B: bool
    witness: dict

    @property
    def all(self) -> bool:
        return self.T and self.M and self.B


def wada_conditions(pair: WadaPair, G: FiniteGroup) -> WadaReport:
    """Check Wada's conditions T, M, B over all triples of G.

    Evaluates the words directly in G, independently of the R tables.
    """
    m = G.order
    x, y, z = np.meshgrid(np.arange(m), np.arange(m), np.arange(m), indexing="ij")

    def u(a, b):
        return eval_word(pair.u, a, b, G)

    def v(a, b):
        return eval_word(pair.v, a, b, G)

    uxy, vxy, uyz, vyz = u(x, y), v(x, y), u(y, z), v(y, z)
    checks = {
        "T": (u(uxy, u(vxy, z)), u(x, uyz)),
        "M": (v(uxy, u(vxy, z)), u(v(x, uyz), vyz)),
        "B": (v(vxy, z), v(v(x, uyz), vyz)),
    }
    result, witness = {}, {}
    for name, (lhs, rhs) in checks.items():
        bad = np.argwhere(lhs != rhs)
        result[name] = not len(bad)
        if len(bad):
            witness[name] = tuple(int(t) for t in bad[0])
    return WadaReport(witness=witness, **result)
