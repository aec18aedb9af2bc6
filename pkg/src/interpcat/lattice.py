"""The lattice of subspaces of F_q^n.

``LatticeIndex`` lists every subspace in a fixed order (by dimension, then
by RREF bytes) and carries the Möbius function of the lattice, computed by
the defining recursion when the index is built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import LimitExceeded, MismatchError
from .exact import Poly, Scalar, det_poly, det_rational, format_poly
from .gfq import FqField, GF, Subspace, _matmul_rows, all_subspaces, intersect, rref_subspaces

DEFAULT_MAX_VECTORS = 4096
DEFAULT_MAX_GRAM = 64


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def mobius_closed_form(q: int, k: int) -> int:
    """mu(0, V) for dim V = k."""
    return (-1) ** k * q ** (k * (k - 1) // 2)


def stanley_poly(q: int, k: int) -> Poly:
    """prod_{i<k} (t - q^i)."""
    return Poly.from_roots(q**i for i in range(k))


@dataclass(frozen=True)
class LatticeIndex:
    field: FqField
    n: int
    subspaces: tuple[Subspace, ...]
    # mobius[(i, j)] for subspaces[i] contained in subspaces[j]
    mobius_table: Mapping[tuple[int, int], int] = field(repr=False)
    index: Mapping[Subspace, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "index", {s: i for i, s in enumerate(self.subspaces)})

    @classmethod
    def build(cls, F: FqField, n: int, max_vectors: int = DEFAULT_MAX_VECTORS) -> "LatticeIndex":
        if F.q**n > max_vectors:
            raise LimitExceeded(f"lattice of F_{F.q}^{n} (q^n)", F.q**n, max_vectors)
        subs = all_subspaces(F, n)
        index = {s: i for i, s in enumerate(subs)}
        down = _down_sets(F, subs, index)
        return cls(F, n, subs, _mobius_from_down_sets(len(subs), down))

    @property
    def q(self) -> int:
        return self.field.q

    def __len__(self) -> int:
        return len(self.subspaces)

    def position(self, u: Subspace) -> int:
        try:
            return self.index[u]
        except KeyError:
            raise MismatchError(f"{u} is not a subspace of F_{self.q}^{self.n}") from None

    def leq(self, u: Subspace, v: Subspace) -> bool:
        return (self.position(u), self.position(v)) in self.mobius_table

    def mobius(self, u: Subspace, v: Subspace) -> int:
        key = (self.position(u), self.position(v))
        try:
            return self.mobius_table[key]
        except KeyError:
            raise MismatchError("mobius(u, v) requires u to be contained in v") from None

    def below(self, v: Subspace) -> list[Subspace]:
        j = self.position(v)
        return [self.subspaces[i] for (i, jj) in self.mobius_table if jj == j]

    def count_by_dim(self) -> list[int]:
        counts = [0] * (self.n + 1)
        for s in self.subspaces:
            counts[s.dim] += 1
        return counts

    def p_poly(self, y: Subspace) -> Poly:
        """sum_{u <= y} mu(u, y) t^{dim u}."""
        j = self.position(y)
        coeffs = [0] * (y.dim + 1)
        for (i, jj), mu in self.mobius_table.items():
            if jj == j:
                coeffs[self.subspaces[i].dim] += mu
        return Poly(coeffs)


def _down_sets(F: FqField, subs: Sequence[Subspace], index: Mapping[Subspace, int]) -> list[list[int]]:
    """For each subspace v, the positions of all subspaces of v."""
    down = []
    for v in subs:
        inside = []
        for k in range(v.dim + 1):
            for c in rref_subspaces(F, v.dim, k):
                vecs = _matmul_rows(F, c.rows, v.rows, v.ambient)
                inside.append(index[Subspace(v.ambient, vecs)] if k else index[Subspace.zero(v.ambient)])
        down.append(inside)
    return down


def _mobius_from_down_sets(size: int, down: Sequence[Sequence[int]]) -> dict[tuple[int, int], int]:
    up: list[list[int]] = [[] for _ in range(size)]
    for j, below in enumerate(down):
        for i in below:
            up[i].append(j)
    table: dict[tuple[int, int], int] = {}
    for i in range(size):
        mu_i: dict[int, int] = {}
        # positions are sorted by dimension, so sorting is a linear extension
        for j in sorted(up[i]):
            if j == i:
                mu_i[j] = 1
            else:
                mu_i[j] = -sum(mu_i[w] for w in down[j] if w != j and w in mu_i)
            table[(i, j)] = mu_i[j]
    return table


def enumerate_subspaces(q: int | FqField, n: int, max_vectors: int = DEFAULT_MAX_VECTORS) -> LatticeIndex:
    return LatticeIndex.build(GF(q), n, max_vectors)


def mobius(L: LatticeIndex, u: Subspace, v: Subspace) -> int:
    return L.mobius(u, v)


def p_poly(L: LatticeIndex, y: Subspace) -> Poly:
    return L.p_poly(y)


def delta_exponents(q: int, n: int) -> list[tuple[int, int]]:
    """Pairs (q^i, e_i) with Delta = prod (t - q^i)^e_i, e_i = sum_{d>i} [n, d]_q."""
    out = []
    for i in range(n):
        e = sum(gaussian_binomial(n, d, q) for d in range(i + 1, n + 1))
        if e:
            out.append((q**i, e))
    return out


def delta_factored(q: int, n: int) -> list[tuple[int, int]]:
    return delta_exponents(q, n)


def delta_poly(q: int, n: int) -> Poly:
    out = Poly.const(1)
    for root, e in delta_exponents(q, n):
        out = out * Poly((-root, 1)) ** e
    return out


def delta_to_json(q: int, n: int) -> list[list]:
    return [[format_poly(Poly((-root, 1))), e] for root, e in delta_exponents(q, n)]


def meet_dims(L: LatticeIndex) -> list[list[int]]:
    """dim(u cap v) over all pairs, in index order."""
    F, subs = L.field, L.subspaces
    m = len(subs)
    out = [[0] * m for _ in range(m)]
    for i in range(m):
        out[i][i] = subs[i].dim
        for j in range(i + 1, m):
            out[i][j] = out[j][i] = intersect(F, subs[i], subs[j]).dim
    return out


def gram_unit_matrix(L: LatticeIndex) -> list[list[Poly]]:
    powers = [Poly.monomial(k) for k in range(L.n + 1)]
    return [[powers[d] for d in row] for row in meet_dims(L)]


def gram_unit_determinant(
    q: int | FqField,
    n: int,
    t: Fraction | int | None = None,
    max_size: int = DEFAULT_MAX_GRAM,
    lattice: LatticeIndex | None = None,
) -> Scalar:
    """det(t^{dim(u cap v)}) over all subspaces u, v of F_q^n.

    ``t=None`` computes the determinant in Q[t]; otherwise t is substituted
    before elimination.
    """
    L = lattice if lattice is not None else enumerate_subspaces(q, n)
    if len(L) > max_size:
        raise LimitExceeded("Gram matrix of the subspace lattice", len(L), max_size)
    dims = meet_dims(L)
    if t is None:
        powers = [Poly.monomial(k) for k in range(n + 1)]
        return Scalar(det_poly([[powers[d] for d in row] for row in dims]))
    t = Fraction(t)
    powers_q = [t**k for k in range(n + 1)]
    return Scalar(det_rational([[powers_q[d] for d in row] for row in dims]))


def complement_count(F: FqField, y_dim: int, line: Subspace | None = None) -> int:
    """Brute-force count of complements of a line inside F_q^{y_dim}."""
    if y_dim == 0:
        raise ValueError("the zero space has no lines")
    if line is None:
        line = Subspace.span(F, y_dim, [[1] + [0] * (y_dim - 1)])
    return sum(
        1
        for w in rref_subspaces(F, y_dim, y_dim - 1)
        if intersect(F, w, line).dim == 0
    )
