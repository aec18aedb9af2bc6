"""Exact linear algebra over Q (backed by FLINT) and a small Q(t) fallback."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import flint

from .exact import Scalar


def _fmpq(x: Fraction | int) -> flint.fmpq:
    if isinstance(x, int):
        return flint.fmpq(x)
    return flint.fmpq(x.numerator, x.denominator)


def to_fmpq_mat(rows: Sequence[Sequence[Fraction | int]], ncols: int | None = None) -> flint.fmpq_mat:
    m = len(rows)
    n = len(rows[0]) if rows else (ncols or 0)
    if m == 0 or n == 0:
        return flint.fmpq_mat(m, n)
    return flint.fmpq_mat(m, n, [_fmpq(x) for r in rows for x in r])


def _to_fraction(x: flint.fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    if not rows or not rows[0]:
        return 0
    return to_fmpq_mat(rows).rank()


def rref(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Nonzero rows of the reduced row-echelon form and the pivot columns."""
    if not rows or ncols == 0:
        return [], []
    R, r = to_fmpq_mat(rows, ncols).rref()
    out = [[_to_fraction(R[i, j]) for j in range(ncols)] for i in range(r)]
    pivots = [next(j for j in range(ncols) if row[j] != 0) for row in out]
    return out, pivots


def nullspace(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : M v = 0}."""
    R, piv = rref(rows, ncols)
    pivset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(piv):
            v[pc] = -R[i][f]
        basis.append(v)
    return basis


def left_nullspace(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> list[list[Fraction]]:
    """Basis of {c : c^T M = 0}."""
    cols = [[r[j] for r in rows] for j in range(ncols)]
    return nullspace(cols, len(rows))


def rank_scalar(rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank over Q(t) by plain Gaussian elimination; use for small matrices."""
    if rows and all(x.is_constant() for r in rows for x in r):
        return rank([[x.constant_value() for x in r] for r in rows])
    a = [list(r) for r in rows]
    rk = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(a)) if not a[i][c].is_zero()), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        p = a[rk][c]
        for i in range(rk + 1, len(a)):
            if not a[i][c].is_zero():
                f = a[i][c] / p
                a[i] = [x - f * y for x, y in zip(a[i], a[rk])]
        rk += 1
    return rk
