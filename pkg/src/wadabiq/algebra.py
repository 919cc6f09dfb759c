"""
Finite groups by Cayley table, free-word evaluation and exact integer
linear algebra (Smith normal form, integer kernels, counting solutions
of linear systems modulo n).

Integer matrices are plain lists of lists of Python ints so that entries
never overflow.
"""

from __future__ import annotations

import itertools
import json
import math
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

IntMatrix = list  # list[list[int]]


class GroupError(ValueError):
    """Raised for an invalid group table or group specification."""


class GroupSpecError(GroupError):
    """A group spec string that does not parse."""


# ---------------------------------------------------------------------------
# Finite groups


class FiniteGroup:
    """A finite group given by its multiplication table on ``0..m-1``.

    ``table[a, b]`` is the index of the product ``a*b``.  The table is
    checked exhaustively for associativity, a two-sided identity and
    inverses on construction.

    Scalar products go through Python lists, which is much faster than
    numpy indexing for the backtracking searches.  ``mul`` and ``inv``
    also accept integer numpy arrays and then act elementwise.
    """

    def __init__(self, table, name: str = "G", labels: Sequence[str] | None = None,
                 check: bool = True):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] < 1:
            raise GroupError("multiplication table must be a non-empty square array")
        m = table.shape[0]
        if table.min() < 0 or table.max() >= m:
            raise GroupError("table entries out of range")
        self.table = table
        self.table.setflags(write=False)
        self.name = name
        self.labels = list(labels) if labels is not None else [str(i) for i in range(m)]
        self.rows = table.tolist()

        idx = np.arange(m)
        ids = [e for e in range(m)
               if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx)]
        if not ids:
            raise GroupError(f"{name}: no identity element")
        self.identity = ids[0]
        inv = np.full(m, -1, dtype=np.int64)
        for a in range(m):
            hits = np.flatnonzero(table[a] == self.identity)
            if len(hits) != 1 or table[hits[0], a] != self.identity:
                raise GroupError(f"{name}: element {a} has no two-sided inverse")
            inv[a] = hits[0]
        self.inverse = inv
        self.inverse.setflags(write=False)
        self.inv_list = inv.tolist()
        if check:
            self.check_associative()

    def check_associative(self):
        t = self.table
        # (ab)c vs a(bc) over all triples, vectorised
        ab_c = t[t, :]                      # ab_c[a, b, c] = (ab)c
        a_bc = t[:, t]                      # a_bc[a, b, c] = a(bc)
        bad = np.argwhere(ab_c != a_bc)
        if len(bad):
            a, b, c = bad[0]
            raise GroupError(f"{self.name}: not associative at ({a}, {b}, {c})")

    @property
    def order(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def mul(self, a, b):
        if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
            return self.table[a, b]
        return self.rows[a][b]

    def inv(self, a):
        if isinstance(a, np.ndarray):
            return self.inverse[a]
        return self.inv_list[a]

    def power(self, a, k: int):
        if isinstance(a, np.ndarray):
            result = np.full_like(a, self.identity)
        else:
            result = self.identity
        if k < 0:
            a, k = self.inv(a), -k
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.rows[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def to_json(self) -> str:
        return json.dumps({"name": self.name, "labels": self.labels,
                           "table": self.rows})

    @classmethod
    def from_json(cls, text: str) -> "FiniteGroup":
        data = json.loads(text)
        return cls(data["table"], name=data.get("name", "G"), labels=data.get("labels"))


def cyclic(n: int) -> FiniteGroup:
    """Additive group Z_n; element i is the residue i."""
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, name=f"Z{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; index ``i + n*j`` stands for r^i s^j."""
    if n < 1:
        raise GroupError("dihedral group needs n >= 1")
    m = 2 * n
    table = np.empty((m, m), dtype=np.int64)
    for a in range(m):
        i, s = a % n, a // n
        for b in range(m):
            j, t = b % n, b // n
            table[a, b] = (i + (-1) ** s * j) % n + n * ((s + t) % 2)
    labels = [f"r{i % n}" + ("s" if i >= n else "") for i in range(m)]
    return FiniteGroup(table, name=f"D{n}", labels=labels)


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group S_n (n <= 5), permutations in lexicographic order.

    The product ``p*q`` is the permutation ``i -> p[q[i]]`` (apply q first).
    """
    if not 1 <= n <= 5:
        raise GroupError("symmetric(n) supports 1 <= n <= 5")
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    labels = ["".join(str(x + 1) for x in p) for p in perms]
    return FiniteGroup(table, name=f"S{n}", labels=labels)


def semidirect_cyclic(m: int, k: int, a: int) -> FiniteGroup:
    """Z_m x| Z_k where the generator t of Z_k acts by s -> a*s.

    Index ``s + m*j`` stands for s t^j, and t s t^-1 = a s.  Requires
    a^k = 1 (mod m) and gcd(a, m) = 1.
    """
    if m < 1 or k < 1:
        raise GroupError("semidirect_cyclic needs m, k >= 1")
    if math.gcd(a, m) != 1 or pow(a, k, m) != 1 % m:
        raise GroupError(f"{a}^{k} is not 1 mod {m}: no action of Z_{k} on Z_{m}")
    order = m * k
    powers = [pow(a, j, m) for j in range(k)]
    table = np.empty((order, order), dtype=np.int64)
    for x in range(order):
        s1, t1 = x % m, x // m
        for y in range(order):
            s2, t2 = y % m, y // m
            table[x, y] = (s1 + powers[t1] * s2) % m + m * ((t1 + t2) % k)
    return FiniteGroup(table, name=f"Z{m}x|Z{k}[{a}]")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with index ``g*|H| + h``."""
    m, n = G.order, H.order
    tg, th = G.table, H.table
    g = np.arange(m * n) // n
    h = np.arange(m * n) % n
    table = tg[g[:, None], g[None, :]] * n + th[h[:, None], h[None, :]]
    labels = [f"({G.labels[i // n]},{H.labels[i % n]})" for i in range(m * n)]
    return FiniteGroup(table, name=f"{G.name}x{H.name}", labels=labels)


def group_from_spec(spec: str) -> FiniteGroup:
    """Parse ``z:<n>``, ``d:<n>``, ``s:<n>``, ``sd:<m>:<k>:<a>`` or
    ``prod:<spec>x<spec>``."""
    spec = spec.strip()
    if spec.startswith("prod:"):
        parts = spec[5:].split("x")
        if len(parts) < 2:
            raise GroupSpecError(f"bad product spec {spec!r}")
        G = group_from_spec(parts[0])
        for p in parts[1:]:
            G = direct_product(G, group_from_spec(p))
        return G
    try:
        kind, *args = spec.split(":")
        nums = [int(x) for x in args]
    except ValueError:
        raise GroupSpecError(f"bad group spec {spec!r}") from None
    makers = {"z": (cyclic, 1), "d": (dihedral, 1), "s": (symmetric, 1),
              "sd": (semidirect_cyclic, 3)}
    if kind not in makers or len(nums) != makers[kind][1]:
        raise GroupSpecError(f"bad group spec {spec!r}")
    return makers[kind][0](*nums)


def battery() -> list[FiniteGroup]:
    """The fixed test battery: Z2..Z7, S3, D4 and F20 = Z5 x| Z4."""
    groups = [cyclic(n) for n in range(2, 8)]
    groups += [symmetric(3), dihedral(4), semidirect_cyclic(5, 4, 2)]
    return groups


# ---------------------------------------------------------------------------
# Free words

_LETTER = re.compile(r"^([A-Za-z]\w*?)(?:\^(-?\d+))?$")


def reduce_word(word) -> tuple:
    """Freely reduce a word given as ``(symbol, exponent)`` pairs."""
    out: list[list] = []
    for sym, e in word:
        if e == 0:
            continue
        if out and out[-1][0] == sym:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([sym, e])
    return tuple((s, e) for s, e in out)


def invert_word(word) -> tuple:
    return tuple((s, -e) for s, e in reversed(word))


@dataclass(frozen=True)
class FreeWord:
    """A reduced word in the free group on x and y."""

    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", reduce_word(self.letters))

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        """Parse e.g. ``"x^-1 y^-1 x"`` or ``"y^2 x"``; ``"1"`` is empty."""
        letters = []
        for tok in text.split():
            if tok == "1":
                continue
            m = _LETTER.match(tok)
            if not m:
                raise ValueError(f"bad word token {tok!r}")
            letters.append((m.group(1), int(m.group(2) or 1)))
        return cls(tuple(letters))

    def inverse(self) -> "FreeWord":
        return FreeWord(invert_word(self.letters))

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(s if e == 1 else f"{s}^{e}" for s, e in self.letters)


def eval_word(w: FreeWord, gx, gy, G: FiniteGroup):
    """Evaluate ``w`` at x -> gx, y -> gy in G (elementwise on arrays)."""
    values = {"x": gx, "y": gy}
    return eval_letters(w.letters, values, G)


def eval_letters(letters, values, G: FiniteGroup):
    result = G.identity
    arrays = [v for v in values.values() if isinstance(v, np.ndarray)]
    if arrays:
        result = np.full(np.broadcast(*arrays).shape, G.identity, dtype=np.int64)
    for sym, e in letters:
        result = G.mul(result, G.power(values[sym], e))
    return result


# ---------------------------------------------------------------------------
# Integer linear algebra


@dataclass
class SmithForm:
    """Smith normal form ``U A V = D`` of an integer matrix A.

    ``factors`` are the nonzero diagonal entries d1 | d2 | ... | dr.
    Viewing the rows of A as relations on ``cols`` generators, the
    cokernel is Z^free_rank plus the cyclic groups Z_d for d > 1.
    """

    factors: list
    rows: int
    cols: int
    left: IntMatrix = field(repr=False)
    right: IntMatrix = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def free_rank(self) -> int:
        return self.cols - self.rank

    @property
    def torsion(self) -> list:
        return [d for d in self.factors if d > 1]

    def diagonal(self) -> IntMatrix:
        D = [[0] * self.cols for _ in range(self.rows)]
        for i, d in enumerate(self.factors):
            D[i][i] = d
        return D

    def describe(self) -> str:
        parts = ["Z" if self.free_rank == 1 else f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def identity_matrix(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def _as_matrix(A, cols: int | None = None) -> IntMatrix:
    M = [[int(x) for x in row] for row in A]
    if cols is None:
        cols = len(M[0]) if M else 0
    if any(len(r) != cols for r in M):
        raise ValueError("ragged matrix")
    return M


def smith_normal_form(A, cols: int | None = None) -> SmithForm:
    """Smith normal form by row and column reduction.

    The pivot is always an entry of least nonzero absolute value in the
    remaining block (ties: lowest row, then lowest column).  ``cols``
    must be given when A has no rows.
    """
    M = _as_matrix(A, cols)
    rows = len(M)
    ncols = len(M[0]) if M else (cols or 0)
    U = identity_matrix(rows)
    V = identity_matrix(ncols)

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (M, V):
            for r in R:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row dst -= q * row src
        for R in (M, U):
            rd, rs = R[dst], R[src]
            for k in range(len(rd)):
                rd[k] -= q * rs[k]

    def add_col(dst, src, q):  # col dst -= q * col src
        for R in (M, V):
            for r in R:
                r[dst] -= q * r[src]

    factors = []
    t = 0
    while t < min(rows, ncols):
        best = None
        for i in range(t, rows):
            for j in range(t, ncols):
                v = abs(M[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = M[t][t]
            for i in range(t + 1, rows):
                if M[i][t]:
                    add_row(i, t, M[i][t] // p)
            for j in range(t + 1, ncols):
                if M[t][j]:
                    add_col(j, t, M[t][j] // p)
            rest = [(abs(M[i][t]), i, t) for i in range(t + 1, rows) if M[i][t]]
            rest += [(abs(M[t][j]), t, j) for j in range(t + 1, ncols) if M[t][j]]
            if rest:
                _, i, j = min(rest)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, ncols)
                        if M[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if M[t][t] < 0:
            for R in (M, U):
                R[t] = [-x for x in R[t]]
        factors.append(M[t][t])
        t += 1
    return SmithForm(factors=factors, rows=rows, cols=ncols, left=U, right=V)


def integer_kernel(A, cols: int | None = None) -> list[list[int]]:
    """A basis of the lattice {x in Z^cols : A x = 0}.

    Taken from the trailing columns of the Smith transform V, then
    LLL-reduced; each vector's first nonzero entry is positive.
    """
    S = smith_normal_form(A, cols)
    basis = [[S.right[i][j] for i in range(S.cols)] for j in range(S.rank, S.cols)]
    basis = lll_reduce(basis)
    return [_sign_normalize(v) for v in basis]


def _sign_normalize(v):
    for x in v:
        if x:
            return list(v) if x > 0 else [-y for y in v]
    return list(v)


def lll_reduce(basis: list[list[int]]) -> list[list[int]]:
    """LLL-reduce a list of linearly independent integer row vectors."""
    if len(basis) <= 1:
        return [list(map(int, v)) for v in basis]
    from sympy import ZZ
    from sympy.polys.matrices import DomainMatrix

    dm = DomainMatrix([[ZZ(int(x)) for x in v] for v in basis],
                      (len(basis), len(basis[0])), ZZ)
    return [[int(x) for x in row] for row in dm.lll().to_list()]


def rank_mod_p(A, p: int) -> int:
    """Rank of an integer matrix over the prime field GF(p)."""
    M = [[x % p for x in row] for row in A]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], -1, p)
        M[rank] = [x * inv % p for x in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                f = M[r][c]
                M[r] = [(x - f * y) % p for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


@dataclass
class ModSolutions:
    """Solutions of A x = 0 (mod n); iterate to stream them lazily."""

    count: int
    modulus: int
    steps: list = field(repr=False)
    right: IntMatrix = field(repr=False)

    def __iter__(self) -> Iterator[tuple]:
        n = self.modulus
        V = self.right
        for ys in itertools.product(*[range(0, n, s) for s in self.steps]):
            yield tuple(sum(V[i][j] * ys[j] for j in range(len(ys))) % n
                        for i in range(len(V)))


def solve_mod(A, n: int, cols: int | None = None) -> ModSolutions:
    """Count and enumerate x in (Z_n)^cols with A x = 0 (mod n)."""
    if n < 2:
        raise ValueError("modulus must be >= 2")
    S = smith_normal_form(A, cols)
    steps = []
    for j in range(S.cols):
        d = S.factors[j] if j < S.rank else 0
        steps.append(n // math.gcd(d, n))
    count = 1
    for s in steps:
        count *= n // s
    return ModSolutions(count=count, modulus=n, steps=steps, right=S.right)
