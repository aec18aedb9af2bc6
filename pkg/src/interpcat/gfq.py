"""Linear algebra over a finite field F_q.

Field elements are ints ``0 .. q-1``; for q = p^e the integer with base-p
digits ``c_0 c_1 ...`` encodes ``c_0 + c_1 X + ...`` modulo the field's
irreducible polynomial.  All arithmetic is table driven.

Subspaces of F_q^n are stored by their unique reduced row-echelon basis, so
equality and hashing of :class:`Subspace` are equality of RREF matrices.
Maps ``c -> y`` are ``dim y x dim c`` matrices acting on column vectors.
"""

from __future__ import annotations

import itertools
from random import Random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import MismatchError

Rows = tuple[tuple[int, ...], ...]

# canonical irreducible polynomials for the non-prime fields we expect to use,
# coefficients lowest degree first
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # X^2 + X + 1
    (2, 3): (1, 1, 0, 1),  # X^3 + X + 1
    (3, 2): (1, 0, 1),  # X^2 + 1
    (2, 4): (1, 1, 0, 0, 1),  # X^4 + X + 1
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e, m = 0, q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
    raise ValueError(f"{q} is not a prime power")


def _poly_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k] * inv % p
        if c:
            for j, y in enumerate(m):
                a[k - dm + j] = (a[k - dm + j] - c * y) % p
    return a[:dm]


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    e = len(m) - 1
    for d in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not any(_poly_mod(list(m), divisor, p)):
                return False
    return True


def _first_irreducible(p: int, e: int) -> tuple[int, ...]:
    for tail in itertools.product(range(p), repeat=e):
        cand = tuple(reversed(tail)) + (1,)
        if cand[0] and _is_irreducible(cand, p):
            return cand
    raise RuntimeError(f"no irreducible polynomial of degree {e} over F_{p}")


@dataclass(frozen=True)
class FqField:
    """The finite field with q = p^e elements."""

    p: int
    e: int = 1
    modulus: tuple[int, ...] | None = None
    add: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    sub: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    mul: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    neg: tuple[int, ...] = field(init=False, repr=False, compare=False)
    inv: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        p, e = self.p, self.e
        if not _is_prime(p) or e < 1:
            raise ValueError(f"invalid field parameters p={p}, e={e}")
        if e == 1:
            if self.modulus not in (None, (0, 1)):
                raise ValueError("prime fields take no modulus")
            object.__setattr__(self, "modulus", None)
        else:
            m = tuple(self.modulus) if self.modulus is not None else DEFAULT_MODULI.get((p, e))
            if m is None:
                m = _first_irreducible(p, e)
            if len(m) != e + 1 or m[-1] != 1 or not _is_irreducible(m, p):
                raise ValueError(f"modulus {m} is not a monic irreducible of degree {e} over F_{p}")
            object.__setattr__(self, "modulus", m)
        q = p**e
        digits = [self._digits(a) for a in range(q)]
        value = {d: a for a, d in enumerate(digits)}
        add = tuple(tuple(value[tuple((x + y) % p for x, y in zip(da, db))] for db in digits) for da in digits)
        neg = tuple(value[tuple((-x) % p for x in da)] for da in digits)
        sub = tuple(tuple(add[a][neg[b]] for b in range(q)) for a in range(q))
        if e == 1:
            mul = tuple(tuple(a * b % p for b in range(q)) for a in range(q))
        else:
            rows = []
            for da in digits:
                row = []
                for db in digits:
                    prod = [0] * (2 * e - 1)
                    for i, x in enumerate(da):
                        for j, y in enumerate(db):
                            prod[i + j] += x * y
                    row.append(value[tuple(_poly_mod(prod, self.modulus, p))])
                rows.append(tuple(row))
            mul = tuple(rows)
        inv = [0] * q
        for a in range(1, q):
            inv[a] = next(b for b in range(1, q) if mul[a][b] == 1)
        for name, val in (("add", add), ("sub", sub), ("mul", mul), ("neg", neg), ("inv", tuple(inv))):
            object.__setattr__(self, name, val)

    def _digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def order(self) -> int:
        return self.q

    def elements(self) -> range:
        return range(self.q)

    def to_json(self) -> dict:
        out: dict = {"p": self.p, "e": self.e}
        if self.modulus is not None:
            out["modulus"] = list(self.modulus)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "FqField":
        mod = data.get("modulus")
        return gf_field(int(data["p"]), int(data.get("e", 1)), tuple(mod) if mod is not None else None)

    def __str__(self) -> str:
        return f"F_{self.q}"


@lru_cache(maxsize=None)
def gf_field(p: int, e: int = 1, modulus: tuple[int, ...] | None = None) -> FqField:
    return FqField(p, e, modulus)


def GF(q: int | FqField) -> FqField:
    """Shared field instance of order q."""
    if isinstance(q, FqField):
        return q
    p, e = _prime_power(q)
    return gf_field(p, e)


# --------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class FqMatrix:
    """Dense matrix over F_q with explicit shape (zero rows/cols allowed)."""

    rows: int
    cols: int
    entries: Rows

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise MismatchError(f"entries do not have shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, entries: Iterable[Iterable[int]], cols: int | None = None) -> "FqMatrix":
        ent = tuple(tuple(int(x) for x in r) for r in entries)
        if cols is None:
            if not ent:
                raise MismatchError("column count of an empty matrix must be given")
            cols = len(ent[0])
        return cls(len(ent), cols, ent)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "FqMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "FqMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def random(cls, F: FqField, rows: int, cols: int, rng: Random) -> "FqMatrix":
        return cls(rows, cols, tuple(tuple(rng.randrange(F.q) for _ in range(cols)) for _ in range(rows)))

    @property
    def T(self) -> "FqMatrix":
        ent = self.entries
        return FqMatrix(self.cols, self.rows, tuple(tuple(r[j] for r in ent) for j in range(self.cols)))

    def hstack(self, other: "FqMatrix") -> "FqMatrix":
        if self.rows != other.rows:
            raise MismatchError("hstack: row counts differ")
        return FqMatrix(self.rows, self.cols + other.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def vstack(self, other: "FqMatrix") -> "FqMatrix":
        if self.cols != other.cols:
            raise MismatchError("vstack: column counts differ")
        return FqMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]


def matmul(F: FqField, A: FqMatrix, B: FqMatrix) -> FqMatrix:
    if A.cols != B.rows:
        raise MismatchError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    return FqMatrix(A.rows, B.cols, _matmul_rows(F, A.entries, B.entries, B.cols))


def _matmul_rows(F: FqField, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], ncols: int) -> Rows:
    add, mul = F.add, F.mul
    out = []
    for row in A:
        acc = [0] * ncols
        for a, brow in zip(row, B):
            if a:
                ma = mul[a]
                acc = [add[x][ma[y]] for x, y in zip(acc, brow)]
        out.append(tuple(acc))
    return tuple(out)


def scale_matrix(F: FqField, c: int, A: FqMatrix) -> FqMatrix:
    mc = F.mul[c]
    return FqMatrix(A.rows, A.cols, tuple(tuple(mc[x] for x in r) for r in A.entries))


def _rref_rows(F: FqField, rows: Iterable[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    A = [list(r) for r in rows]
    sub, mul, inv = F.sub, F.mul, F.inv
    pivots: list[int] = []
    r = 0
    m = len(A)
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        row = A[r]
        if row[c] != 1:
            s = mul[inv[row[c]]]
            row = [s[x] for x in row]
            A[r] = row
        for i in range(m):
            f = A[i][c]
            if i != r and f:
                mf = mul[f]
                A[i] = [sub[a][mf[b]] for a, b in zip(A[i], row)]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rref(F: FqField, M: FqMatrix) -> tuple[FqMatrix, int, list[int]]:
    """Reduced row-echelon form (nonzero rows only), rank and pivot columns."""
    R, piv = _rref_rows(F, M.entries, M.cols)
    return FqMatrix(len(R), M.cols, tuple(tuple(r) for r in R)), len(R), piv


def rank(F: FqField, M: FqMatrix) -> int:
    return len(_rref_rows(F, M.entries, M.cols)[1])


def _null_rows(F: FqField, rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    R, piv = _rref_rows(F, rows, ncols)
    neg = F.neg
    pivset = set(piv)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(piv):
            v[pc] = neg[R[i][f]]
        out.append(tuple(v))
    return out


def invert(F: FqField, M: FqMatrix) -> FqMatrix:
    n = M.rows
    if M.cols != n:
        raise MismatchError("inverse of a non-square matrix")
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(M.entries)]
    R, piv = _rref_rows(F, aug, 2 * n)
    if piv[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("matrix is singular")
    return FqMatrix(n, n, tuple(tuple(r[n:]) for r in R[:n]))


# --------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_q^ambient given by its RREF basis (one tuple per row)."""

    ambient: int
    rows: Rows

    @classmethod
    def span(cls, F: FqField, ambient: int, vectors: Iterable[Sequence[int]]) -> "Subspace":
        R, _ = _rref_rows(F, vectors, ambient)
        return cls(ambient, tuple(tuple(r) for r in R))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, FqMatrix.identity(ambient).entries)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> FqMatrix:
        return FqMatrix(self.dim, self.ambient, self.rows)

    @property
    def key(self) -> bytes:
        return bytes([self.ambient]) + bytes(x for r in self.rows for x in r)

    def sort_key(self) -> tuple[int, bytes]:
        return (self.dim, bytes(x for r in self.rows for x in r))

    def contains_vector(self, F: FqField, v: Sequence[int]) -> bool:
        return len(_rref_rows(F, self.rows + (tuple(v),), self.ambient)[1]) == self.dim

    def issubspace(self, F: FqField, other: "Subspace") -> bool:
        """True if self is contained in other."""
        if self.ambient != other.ambient:
            raise MismatchError("ambient dimensions differ")
        if self.dim > other.dim:
            return False
        return len(_rref_rows(F, other.rows + self.rows, self.ambient)[1]) == other.dim

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def kernel_basis(F: FqField, M: FqMatrix) -> Subspace:
    """Right null space {v : M v = 0} as a subspace of F_q^cols."""
    return Subspace.span(F, M.cols, _null_rows(F, M.entries, M.cols))


def row_space(F: FqField, M: FqMatrix) -> Subspace:
    return Subspace.span(F, M.cols, M.entries)


def intersect(F: FqField, u: Subspace, v: Subspace) -> Subspace:
    if u.ambient != v.ambient:
        raise MismatchError(f"ambient mismatch: {u.ambient} vs {v.ambient}")
    if not u.dim or not v.dim:
        return Subspace.zero(u.ambient)
    # a.U = b.V  <=>  (a, b) in left kernel of [U; -V]
    neg = F.neg
    cols = [tuple(u.rows[i][k] for i in range(u.dim)) + tuple(neg[v.rows[j][k]] for j in range(v.dim)) for k in range(u.ambient)]
    combos = _null_rows(F, cols, u.dim + v.dim)
    vecs = _matmul_rows(F, [c[: u.dim] for c in combos], u.rows, u.ambient)
    return Subspace.span(F, u.ambient, vecs)


def join(F: FqField, u: Subspace, v: Subspace) -> Subspace:
    if u.ambient != v.ambient:
        raise MismatchError(f"ambient mismatch: {u.ambient} vs {v.ambient}")
    return Subspace.span(F, u.ambient, u.rows + v.rows)


def meet_join(F: FqField, u: Subspace, v: Subspace) -> tuple[Subspace, Subspace]:
    return intersect(F, u, v), join(F, u, v)


def pullback(F: FqField, Fm: FqMatrix, Gm: FqMatrix) -> Subspace:
    """{(a, b) : Fm a = Gm b} inside F_q^(cols Fm + cols Gm)."""
    if Fm.rows != Gm.rows:
        raise MismatchError(f"pullback over different targets: {Fm.rows} vs {Gm.rows}")
    neg = F.neg
    negG = FqMatrix(Gm.rows, Gm.cols, tuple(tuple(neg[x] for x in r) for r in Gm.entries))
    return kernel_basis(F, Fm.hstack(negG))


def image(F: FqField, M: FqMatrix) -> Subspace:
    """Column space of M as a subspace of F_q^rows."""
    return Subspace.span(F, M.rows, M.T.entries)


def vectors_of(F: FqField, u: Subspace) -> Iterator[tuple[int, ...]]:
    """All q^dim u vectors of u, in lexicographic order of coordinates."""
    add, mul = F.add, F.mul
    for coeffs in itertools.product(range(F.q), repeat=u.dim):
        v = [0] * u.ambient
        for c, row in zip(coeffs, u.rows):
            if c:
                mc = mul[c]
                v = [add[a][mc[b]] for a, b in zip(v, row)]
        yield tuple(v)


def rref_subspaces(F: FqField, n: int, k: int) -> Iterator[Subspace]:
    """Every k-dimensional subspace of F_q^n, each exactly once."""
    q = F.q
    for pivots in itertools.combinations(range(n), k):
        pivset = set(pivots)
        free = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivset]
        for vals in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, c), x in zip(free, vals):
                rows[i][c] = x
            yield Subspace(n, tuple(tuple(r) for r in rows))


@lru_cache(maxsize=64)
def all_subspaces(F: FqField, n: int) -> tuple[Subspace, ...]:
    """All subspaces of F_q^n sorted by (dim, RREF bytes)."""
    subs = [s for k in range(n + 1) for s in rref_subspaces(F, n, k)]
    subs.sort(key=Subspace.sort_key)
    return tuple(subs)


def project(u: Subspace, start: int, stop: int) -> FqMatrix:
    """Matrix whose rows are the basis rows of u restricted to coords [start, stop)."""
    return FqMatrix(u.dim, stop - start, tuple(r[start:stop] for r in u.rows))


def general_linear_group(F: FqField, r: int) -> list[FqMatrix]:
    """All invertible r x r matrices, in lexicographic order of their entries."""
    out = []
    for flat in itertools.product(range(F.q), repeat=r * r):
        M = FqMatrix(r, r, tuple(tuple(flat[i * r : (i + 1) * r]) for i in range(r)))
        if rank(F, M) == r:
            out.append(M)
    return out


def gl_order(r: int, q: int) -> int:
    out = 1
    for i in range(r):
        out *= q**r - q**i
    return out
