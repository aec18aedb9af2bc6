"""The specialization functor S at t = q^r.

With p = F_q^r, S sends ``[x]`` to the permutation module K[Hom(p, x)] of
GL(r, F_q) and a relation ``W`` inside ``x + y`` to the matrix

    S(W)[gamma, alpha] = #{beta : p -> W with beta_x = alpha, beta_y = gamma}

which is 1 exactly when every column of ``[alpha; gamma]`` lies in W.  A
map ``alpha: p -> x`` is stored as a dim-x by r matrix and indexed by its
entries read row-major in base q, so the basis of ``S([x + x'])`` is the
Kronecker product of the bases of ``S([x])`` and ``S([x'])``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterator, Sequence

from . import qlinalg
from .category import InterpCategory, Morphism, SumObject, as_object, gen
from .errors import LimitExceeded, MismatchError, ParameterError
from .gfq import (
    GF,
    FqField,
    FqMatrix,
    Subspace,
    _null_rows,
    _rref_rows,
    general_linear_group,
    gl_order,
    invert,
    vectors_of,
)
from .semisimple import gram_rank, negligible_basis

DEFAULT_MAX_MODULE = 4096

Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class GLGroup:
    """GL(r, F_q) as an explicit list of matrices."""

    field: FqField
    r: int
    elements: tuple[FqMatrix, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(general_linear_group(self.field, self.r)))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def inverses(self) -> tuple[FqMatrix, ...]:
        return tuple(invert(self.field, g) for g in self.elements)


@lru_cache(maxsize=None)
def gl_group(q: int, r: int) -> GLGroup:
    return GLGroup(GF(q), r)


def map_index(entries: Sequence[Sequence[int]], q: int) -> int:
    """Position of a matrix p -> x in the basis of S([x])."""
    k = 0
    for row in entries:
        for a in row:
            k = k * q + a
    return k


def map_from_index(k: int, dx: int, r: int, q: int) -> tuple[tuple[int, ...], ...]:
    digits = []
    for _ in range(dx * r):
        k, a = divmod(k, q)
        digits.append(a)
    digits.reverse()
    return tuple(tuple(digits[i * r : (i + 1) * r]) for i in range(dx))


@dataclass(frozen=True)
class PermModule:
    """K[Hom(p, x)] with GL(r, F_q) acting by alpha -> alpha g^-1."""

    field: FqField
    dx: int
    r: int

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def dim(self) -> int:
        return self.q ** (self.dx * self.r)

    def basis(self) -> Iterator[tuple[tuple[int, ...], ...]]:
        for k in range(self.dim):
            yield map_from_index(k, self.dx, self.r, self.q)

    def action(self, g_inv: FqMatrix) -> list[int]:
        """perm[k] = index of alpha_k g^-1, for g given by its inverse."""
        F, r = self.field, self.r
        out = []
        for alpha in self.basis():
            moved = [
                [_dot(F, row, [g_inv.entries[i][j] for i in range(r)]) for j in range(r)] for row in alpha
            ]
            out.append(map_index(moved, self.q))
        return out


def _dot(F: FqField, a: Sequence[int], b: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = F.add[acc][F.mul[x][y]]
    return acc


def s_object(q: int | FqField, dx: int, r: int, limit: int = DEFAULT_MAX_MODULE) -> PermModule:
    F = GF(q)
    size = F.q ** (dx * r)
    if size > limit:
        raise LimitExceeded(f"S([{dx}]) at r={r}", size, limit)
    return PermModule(F, dx, r)


def s_dim(X: SumObject, q: int, r: int) -> int:
    return sum(q ** (d * r) for d in as_object(X).dims)


@lru_cache(maxsize=1 << 14)
def relation_matrix_entries(F: FqField, W: Subspace, dx: int, r: int) -> tuple[tuple[int, int], ...]:
    """Nonzero positions (gamma, alpha) of S(W); each entry equals 1."""
    dy = W.ambient - dx
    q = F.q
    vecs = list(vectors_of(F, W))
    out = set()
    for cols in product(vecs, repeat=r):
        alpha = [[cols[c][i] for c in range(r)] for i in range(dx)]
        gamma = [[cols[c][dx + i] for c in range(r)] for i in range(dy)]
        out.add((map_index(gamma, q), map_index(alpha, q)))
    return tuple(sorted(out))


def _check_parameter(cat: InterpCategory, r: int) -> Fraction:
    if cat.t is None:
        raise ParameterError("specialization needs a numeric category with t = q^r")
    target = Fraction(cat.q**r)
    if cat.t != target:
        raise ParameterError(f"specialization at r={r} needs t = {target}, got t = {cat.t}")
    return target


def s_morphism(F: Morphism, r: int, limit: int = DEFAULT_MAX_MODULE) -> Matrix:
    """Dense matrix of S(F): rows indexed by S(target), columns by S(source)."""
    cat = F.cat
    _check_parameter(cat, r)
    q = cat.q
    rows, cols = s_dim(F.target, q, r), s_dim(F.source, q, r)
    if max(rows, cols) > limit:
        raise LimitExceeded("specialization matrix", max(rows, cols), limit)
    row_off = _offsets(F.target, q, r)
    col_off = _offsets(F.source, q, r)
    M = [[Fraction(0)] * cols for _ in range(rows)]
    for i, j, W, c in F.terms():
        value = c.constant_value()
        dx = F.source.dims[i]
        for g, a in relation_matrix_entries(cat.field, W, dx, r):
            M[row_off[j] + g][col_off[i] + a] += value
    return M


def _offsets(X: SumObject, q: int, r: int) -> list[int]:
    out, acc = [], 0
    for d in X.dims:
        out.append(acc)
        acc += q ** (d * r)
    return out


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A or not B:
        return [[Fraction(0)] * (len(B[0]) if B else 0) for _ in A]
    P = qlinalg.to_fmpq_mat(A) * qlinalg.to_fmpq_mat(B)
    return [[Fraction(int(P[i, j].p), int(P[i, j].q)) for j in range(P.ncols())] for i in range(P.nrows())]


def kron(A: Matrix, B: Matrix) -> Matrix:
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def matrix_trace(A: Matrix) -> Fraction:
    return sum((A[i][i] for i in range(len(A))), Fraction(0))


def is_zero_matrix(A: Matrix) -> bool:
    return all(x == 0 for row in A for x in row)


def action_permutation(X: SumObject, q: int, r: int, g_inv: FqMatrix) -> list[int]:
    """The permutation of the basis of S(X) induced by g."""
    X = as_object(X)
    F = GF(q)
    perm: list[int] = []
    for d, off in zip(X.dims, _offsets(X, q, r)):
        perm.extend(off + k for k in PermModule(F, d, r).action(g_inv))
    return perm


def is_equivariant(A: Matrix, perm_source: Sequence[int], perm_target: Sequence[int]) -> bool:
    """A P_g = P_g A, where P_g sends basis vector k to perm[k]."""
    for a, row in enumerate(A):
        pa = perm_target[a]
        for b, x in enumerate(row):
            if A[pa][perm_source[b]] != x:
                return False
    return True


def orbit_count(q: int, dx: int, dy: int, r: int, limit: int = DEFAULT_MAX_MODULE) -> int:
    """Orbits of GL(r, F_q) on Hom(p, x) x Hom(p, y), by exhaustive enumeration."""
    n = dx + dy
    size = q ** (n * r)
    if size > limit:
        raise LimitExceeded(f"Hom(p, x) x Hom(p, y) at r={r}", size, limit)
    G = gl_group(q, r)
    module = PermModule(G.field, n, r)
    perms = [module.action(g) for g in G.inverses]
    seen = bytearray(size)
    orbits = 0
    for k in range(size):
        if seen[k]:
            continue
        orbits += 1
        for perm in perms:
            seen[perm[k]] = 1
    return orbits


def orbit_count_burnside(q: int, dx: int, dy: int, r: int) -> int:
    """Orbit count by averaging fixed points: alpha g = alpha row by row."""
    F = GF(q)
    n = dx + dy
    total = 0
    for g in general_linear_group(F, r):
        # rows v with v (g - 1) = 0, i.e. (g - 1)^T v^T = 0
        gm1 = [[F.sub[g.entries[i][j]][int(i == j)] for i in range(r)] for j in range(r)]
        fixed = len(_null_rows(F, gm1, r))
        total += q ** (n * fixed)
    return total // gl_order(r, q)


def epimorphism_count(q: int, dx: int, r: int) -> int:
    """Full-rank dx by r matrices over F_q, counted by enumeration."""
    F = GF(q)
    count = 0
    for k in range(q ** (dx * r)):
        alpha = map_from_index(k, dx, r, q)
        if len(_rref_rows(F, alpha, r)[1]) == dx:
            count += 1
    return count


def epimorphism_formula(q: int, dx: int, r: int) -> int:
    out = 1
    for i in range(dx):
        out *= q**r - q**i
    return out


@dataclass
class QuotientReport:
    q: int
    r: int
    x: int
    y: int
    gram_rank: int
    orbit_count: int
    radical_dim: int
    radical_killed: bool
    functorial: bool
    pairs_checked: int

    @property
    def match(self) -> bool:
        return self.gram_rank == self.orbit_count

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "r": self.r,
            "x": self.x,
            "y": self.y,
            "gram_rank": self.gram_rank,
            "orbit_count": self.orbit_count,
            "match": self.match,
            "radical_killed": self.radical_killed,
            "radical_dim": self.radical_dim,
            "functorial": self.functorial,
            "pairs_checked": self.pairs_checked,
        }


def quotient_check(q: int, dx: int, dy: int, r: int, pairs: int = 20, seed: int = 0) -> QuotientReport:
    """Compare Hom_T([x],[y]) / N with Hom_GL(S[x], S[y]) at t = q^r."""
    cat = InterpCategory(q, q**r)
    X, Y = gen(dx), gen(dy)
    rank = gram_rank(cat, X, Y)
    orbits = orbit_count(q, dx, dy, r)
    negligible = negligible_basis(cat, X, Y)
    killed = all(is_zero_matrix(s_morphism(F, r)) for F in negligible)
    rng = random.Random(seed)
    functorial = True
    for _ in range(pairs):
        F = cat.random_morphism(X, Y, rng)
        G = cat.random_morphism(Y, X, rng)
        SF, SG = s_morphism(F, r), s_morphism(G, r)
        if s_morphism(G @ F, r) != matmul(SG, SF) or s_morphism(F @ G, r) != matmul(SF, SG):
            functorial = False
            break
    return QuotientReport(q, r, dx, dy, rank, orbits, len(negligible), killed, functorial, pairs)


def tensor_compatible(F: Morphism, G: Morphism, r: int) -> bool:
    """S(F (x) G) = S(F) (x) S(G) for morphisms between generators."""
    if not (F.source.is_generator and F.target.is_generator and G.source.is_generator and G.target.is_generator):
        raise MismatchError("tensor compatibility is checked on generator objects")
    return s_morphism(F.cat.tensor(F, G), r) == kron(s_morphism(F, r), s_morphism(G, r))


def trace_compatible(F: Morphism, r: int) -> bool:
    """tr S(F) equals the categorical trace of F at t = q^r."""
    return matrix_trace(s_morphism(F, r)) == F.cat.trace(F).constant_value()


def cut_object_dim(cat: InterpCategory, dx: int, r: int) -> int:
    """dim S([x]^*), the rank of S(e*_x) on S([x])."""
    idem = cat.lattice_idempotents(dx)
    top = idem.lattice.subspaces[-1]
    return qlinalg.rank(s_morphism(idem.primitive[top], r))
