"""Semisimplicity diagnostics at a numeric parameter t.

The negligible morphisms N(X, X) are the kernel of the trace form
(F, G) -> tr(G o F) on End(X).  At regular t this form is nondegenerate; at
t = q^r it acquires a kernel whose size is measured here exactly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import flint

from . import qlinalg
from .category import InterpCategory, Morphism, SumObject, as_object
from .errors import LimitExceeded, ParameterError
from .exact import Scalar, as_rational
from .gfq import GF, _matmul_rows, general_linear_group, gl_order, invert
from .lattice import delta_exponents

log = logging.getLogger(__name__)

DEFAULT_MAX_EXPONENT = 64
DEFAULT_MAX_GROUP = 20000


@dataclass(frozen=True)
class ParamStatus:
    t: Fraction
    q: int
    singular: bool
    witness: int | None = None

    def to_json(self) -> dict:
        return {"t": f"{self.t.numerator}/{self.t.denominator}", "q": self.q, "singular": self.singular, "witness": self.witness}


def is_singular(t: Fraction | int | str, q: int, max_exponent: int = DEFAULT_MAX_EXPONENT) -> ParamStatus:
    """Singular iff t is 1, q, q^2, ...; t = 0 is regular since Mod(F_q) is split."""
    t = as_rational(t)
    if t.denominator == 1 and t >= 1:
        n, i = t.numerator, 0
        while n % q == 0 and i < max_exponent:
            n //= q
            i += 1
        if n == 1:
            return ParamStatus(t, q, True, i)
    return ParamStatus(t, q, False, None)


def _require_numeric(cat: InterpCategory) -> Fraction:
    if cat.t is None:
        raise ParameterError("this computation needs a numeric parameter t")
    return cat.t


def _numeric_gram(cat: InterpCategory, X: SumObject, Y: SumObject) -> tuple[list, list, list[list[Fraction]]]:
    t = _require_numeric(cat)
    B1, B2, mat = cat.gram_exponents(X, Y)
    zero = Fraction(0)
    powers: dict[int, Fraction] = {}
    rows = []
    for row in mat:
        out = []
        for k in row:
            if k is None:
                out.append(zero)
            else:
                if k not in powers:
                    powers[k] = t**k
                out.append(powers[k])
        rows.append(out)
    return B1, B2, rows


def gram_rank(cat: InterpCategory, X: SumObject, Y: SumObject) -> int:
    """Rank of the trace pairing Hom(X,Y) x Hom(Y,X) -> K."""
    _, _, rows = _numeric_gram(cat, as_object(X), as_object(Y))
    return qlinalg.rank(rows)


def negligible_basis(cat: InterpCategory, X: SumObject, Y: SumObject) -> list[Morphism]:
    """Basis of N(X, Y) = {F : tr(G o F) = 0 for all G: Y -> X}."""
    X, Y = as_object(X), as_object(Y)
    B1, _, rows = _numeric_gram(cat, X, Y)
    if not rows:
        return []
    kernel = qlinalg.left_nullspace(rows, len(rows[0]))
    return [cat.from_coordinates(X, Y, v) for v in kernel]


def radical(cat: InterpCategory, X: SumObject) -> list[Morphism]:
    """Basis of N(X, X), the kernel of the trace form on End(X)."""
    return negligible_basis(cat, X, X)


def radical_dim(cat: InterpCategory, X: SumObject) -> int:
    X = as_object(X)
    return cat.hom_dim(X, X) - gram_rank(cat, X, X)


def is_negligible(F: Morphism) -> bool:
    """tr(G o F) = 0 for every basis morphism G: target -> source."""
    cat = F.cat
    return all(cat.trace(G @ F).is_zero() for G in cat.hom_basis(F.target, F.source))


def symbolic_radical_roots(q: int, dx: int) -> list[int]:
    """Values of t at which End([dx]) has a nonzero trace-form kernel.

    End([x]) pairs with itself like the subspace lattice of x + x, so these
    are the roots of the lattice determinant of F_q^{2 dx}.
    """
    return [root for root, _ in delta_exponents(q, 2 * dx)]


def structure_constants(cat: InterpCategory, X: SumObject) -> tuple[list, dict[tuple[int, int], list[tuple[int, Scalar]]]]:
    """Products b_i o b_j of basis elements of End(X) in coordinates."""
    X = as_object(X)
    terms = cat.hom_basis_terms(X, X)
    index = {(i, j, W): n for n, (i, j, W) in enumerate(terms)}
    basis = cat.hom_basis(X, X)
    table: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
    for a, A in enumerate(basis):
        for b, B in enumerate(basis):
            prod = A @ B
            table[(a, b)] = [(index[(i, j, W)], c) for i, j, W, c in prod.terms()]
    return terms, table


def center_dim(cat: InterpCategory, X: SumObject) -> int:
    """dim Z(End(X) / N(X, X)), solved exactly over Q."""
    _require_numeric(cat)
    X = as_object(X)
    terms, table = structure_constants(cat, X)
    n = len(terms)
    N = [[c.constant_value() for c in cat.coordinates(F, terms)] for F in radical(cat, X)]
    # rows of Q span the annihilator of N, so Q v = 0 iff v lies in N
    Q = qlinalg.to_fmpq_mat(qlinalg.nullspace(N, n)) if N else None
    blocks = []
    for i in range(n):
        # column j holds the commutator z_j b_i - b_i z_j
        M = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            for k, c in table[(j, i)]:
                M[k][j] += c.constant_value()
            for k, c in table[(i, j)]:
                M[k][j] -= c.constant_value()
        Mf = qlinalg.to_fmpq_mat(M)
        blocks.append(Mf if Q is None else Q * Mf)
    rows = sum(b.nrows() for b in blocks)
    stacked = flint.fmpq_mat(rows, n)
    r0 = 0
    for b in blocks:
        for a in range(b.nrows()):
            for j in range(n):
                stacked[r0 + a, j] = b[a, j]
        r0 += b.nrows()
    solutions = n - stacked.rank()
    return solutions - len(N)


def conj_class_count(m: int, q: int, max_group: int = DEFAULT_MAX_GROUP) -> int:
    """Number of conjugacy classes of GL(m, F_q), by exhaustive conjugation."""
    order = gl_order(m, q)
    if order > max_group:
        raise LimitExceeded(f"GL({m}, F_{q})", order, max_group)
    F = GF(q)
    G = general_linear_group(F, m)
    inv = [invert(F, g) for g in G]
    seen: set = set()
    classes = 0
    for h in G:
        if h.entries in seen:
            continue
        classes += 1
        for g, gi in zip(G, inv):
            gh = _matmul_rows(F, g.entries, h.entries, m)
            seen.add(_matmul_rows(F, gh, gi.entries, m))
    return classes


def expected_blocks(dx: int, q: int) -> int:
    """sum_{m <= dx} #conjugacy classes of GL(m, F_q)."""
    return sum(conj_class_count(m, q) for m in range(dx + 1))
