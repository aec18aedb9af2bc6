"""Exact coefficient arithmetic: Q, Q[t] and the rational function field Q(t).

Rationals are :class:`fractions.Fraction`.  ``Poly`` is a dense univariate
polynomial over Q (lowest degree first) and ``Scalar`` a reduced quotient of
two polynomials with monic denominator.  A constant ``Scalar`` has
denominator 1, so numeric work (t fixed to a rational) uses the same type.

Wire format for scalars: ``"p(t)/q(t)"`` with integer-coefficient
polynomials written in expanded form, e.g. ``"(t^2-3*t+2)/1"`` or ``"3/2"``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Callable, Iterable, Sequence, TypeVar, Union

from .errors import PoleError

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rational(value: Union[int, Fraction, str]) -> Fraction:
    """Coerce an int, Fraction or ``"a/b"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


# --------------------------------------------------------------------------
# integer polynomial helpers (lists of ints, lowest degree first)


def _ztrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zmul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _zsub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _ztrim(out)


def _zdiv_exact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Quotient a / b in Z[t]; the division must be exact."""
    a = list(a)
    _ztrim(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    db, lb = len(b) - 1, b[-1]
    out = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c, r = divmod(a[k + db], lb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return out


def _zcontent(a: Sequence[int]) -> int:
    return reduce(gcd, a, 0)


def _zprimitive(a: Sequence[int]) -> list[int]:
    a = _ztrim(list(a))
    if not a:
        return a
    c = _zcontent(a)
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def _zprem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder of a by b."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [x * lb for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= lr * y
        _ztrim(r)
    return r


# --------------------------------------------------------------------------


class Poly:
    """Univariate polynomial in t with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[int, Fraction]] = ()) -> None:
        c = [x if isinstance(x, Fraction) else Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "Poly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def const(cls, c: Union[int, Fraction]) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Union[int, Fraction] = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Union[int, Fraction]]) -> "Poly":
        out = cls.const(1)
        for r in roots:
            out = out * cls((-Fraction(r), 1))
        return out

    # -- basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if len(self.coeffs) > 1:
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else _ZERO

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def __call__(self, x: Union[int, Fraction]) -> Fraction:
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if isinstance(acc, Fraction) else Fraction(acc)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- ring operations

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(x + b[i] if i < len(b) else x for i, x in enumerate(a)))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other: "Poly") -> "Poly":
        return Poly.const(other) - self

    def __mul__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        if len(b) == 1:
            s = b[0]
            return Poly._raw(tuple(x * s for x in a))
        if len(a) == 1:
            s = a[0]
            return Poly._raw(tuple(s * y for y in b))
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        inv_lc = 1 / other.lc
        q = [_ZERO] * max(len(r) - db, 0)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] * inv_lc
            q[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    r[k + j] -= c * y
        return Poly(q), Poly(r[:db] if db > 0 else [])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.lc
        if lc == 1:
            return self
        return Poly._raw(tuple(x / lc for x in self.coeffs))

    def to_integer(self) -> tuple[list[int], Fraction]:
        """Return (integer coefficients, scale) with self = scale * poly(ints)."""
        if not self.coeffs:
            return [], _ONE
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        cont = _zcontent(ints)
        return [x // cont for x in ints], Fraction(cont, den)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via the primitive polynomial remainder sequence over Z."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return Poly.const(1)
    x = _zprimitive(a.to_integer()[0])
    y = _zprimitive(b.to_integer()[0])
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _zprem(x, y)
        x, y = y, _zprimitive(r)
    return Poly(x).monic()


T = Poly.monomial(1)
ONE_POLY = Poly.const(1)
ZERO_POLY = Poly()


class Scalar:
    """Element of Q(t) in reduced form: gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Union[Poly, int, Fraction] = 0, den: Union[Poly, int, Fraction] = 1) -> None:
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.is_constant():
            c = den.coeffs[0]
            self.num = num if c == 1 else Poly._raw(tuple(x / c for x in num.coeffs))
            self.den = ONE_POLY
            return
        if num.is_zero():
            self.num, self.den = ZERO_POLY, ONE_POLY
            return
        g = poly_gcd(num, den)
        if not g.is_constant():
            num, den = num // g, den // g
        if den.is_constant():
            c = den.coeffs[0]
            self.num, self.den = Poly._raw(tuple(x / c for x in num.coeffs)), ONE_POLY
            return
        lc = den.lc
        if lc != 1:
            num = Poly._raw(tuple(x / lc for x in num.coeffs))
            den = den.monic()
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: Poly, den: Poly = ONE_POLY) -> "Scalar":
        s = object.__new__(cls)
        s.num, s.den = num, den
        return s

    @classmethod
    def t(cls) -> "Scalar":
        return cls._raw(T)

    @classmethod
    def coerce(cls, value: "ScalarLike") -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, Poly):
            return cls._raw(value)
        if isinstance(value, str):
            return parse_scalar(value)
        return cls._raw(Poly.const(as_rational(value)))

    # -- queries

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den.is_constant() and self.num.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on t")
        return self.num.constant_value()

    def evaluate_at(self, c: Union[int, Fraction, str]) -> Fraction:
        c = as_rational(c)
        d = self.den(c)
        if d == 0:
            raise PoleError(f"denominator {format_poly(self.den)} vanishes at t = {c}")
        return self.num(c) / d

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Poly)):
            return self == Scalar.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # -- field operations

    def __add__(self, other: "ScalarLike") -> "Scalar":
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        o = Scalar.coerce(other)
        if self.den is ONE_POLY and o.den is ONE_POLY:
            return Scalar._raw(self.num + o.num)
        return Scalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw(-self.num, self.den)

    def __sub__(self, other: "ScalarLike") -> "Scalar":
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: "ScalarLike") -> "Scalar":
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        return Scalar.coerce(other) - self

    def __mul__(self, other: "ScalarLike") -> "Scalar":
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        o = Scalar.coerce(other)
        if self.den is ONE_POLY and o.den is ONE_POLY:
            return Scalar._raw(self.num * o.num)
        return Scalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "ScalarLike") -> "Scalar":
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        o = Scalar.coerce(other)
        if o.is_zero():
            raise ZeroDivisionError(f"division of {self} by zero")
        return Scalar(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: "ScalarLike") -> "Scalar":
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        return Scalar.coerce(other) / self

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return Scalar._raw(ONE_POLY) / (self ** (-k))
        return Scalar(self.num ** k, self.den ** k)


ScalarLike = Union[Scalar, Poly, int, Fraction, str]
_OPERANDS = (Scalar, Poly, int, Fraction, str)


def scalar_arith(a: ScalarLike, b: ScalarLike, op: str) -> Scalar:
    """Apply ``op`` in {add, sub, mul, div} to two scalars."""
    a, b = Scalar.coerce(a), Scalar.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def evaluate_at(s: ScalarLike, c: Union[int, Fraction, str]) -> Fraction:
    return Scalar.coerce(s).evaluate_at(c)


# --------------------------------------------------------------------------
# formatting and parsing


def _format_int_poly(c: Sequence[int]) -> str:
    if not any(c):
        return "0"
    parts = []
    for k in range(len(c) - 1, -1, -1):
        a = c[k]
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if k == 0:
            body = str(mag)
        else:
            mono = "t" if k == 1 else f"t^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def format_poly(p: Poly) -> str:
    """Expanded form such as ``t^2-3*t+2``; rational coefficients as ``a/b*t``."""
    if all(c.denominator == 1 for c in p.coeffs):
        return _format_int_poly([int(c) for c in p.coeffs])
    ints, scale = p.to_integer()
    return f"{scale}*({_format_int_poly(ints)})"


def _wrap(c: Sequence[int]) -> str:
    """Parenthesize unless the side is an integer or a bare power of t."""
    s = _format_int_poly(c)
    nonzero = [i for i, x in enumerate(c) if x]
    bare = len(nonzero) <= 1 and (not nonzero or nonzero[0] == 0 or c[nonzero[0]] == 1)
    return s if bare else f"({s})"


def format_scalar(s: Scalar) -> str:
    """Serialize as ``num/den`` with integer coefficients and positive leading den."""
    coeffs = s.num.coeffs + s.den.coeffs
    m = lcm(*(c.denominator for c in coeffs))
    num = [int(c * m) for c in s.num.coeffs]
    den = [int(c * m) for c in s.den.coeffs]
    g = reduce(gcd, num + den, 0)
    if g > 1:
        num = [x // g for x in num]
        den = [x // g for x in den]
    return f"{_wrap(num)}/{_wrap(den)}"


_TERM = re.compile(r"([+-]?)(\d*)(\*?t(?:\^(\d+))?)?")


def parse_poly(text: str) -> Poly:
    """Parse an expanded integer-coefficient polynomial in t."""
    s = text.replace(" ", "")
    while s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError(f"empty polynomial in {text!r}")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        sign, digits, mono, exp = m.groups()
        if pos > 0 and not sign:
            raise ValueError(f"missing operator in {text!r} at position {pos}")
        if mono and mono.startswith("*") and not digits:
            raise ValueError(f"dangling '*' in {text!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        k = (int(exp) if exp else 1) if mono else 0
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
    deg = max(coeffs)
    return Poly([coeffs.get(i, 0) for i in range(deg + 1)])


def _split_top_level(s: str) -> list[str]:
    depth, parts, start = 0, [], 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {s!r}")
        elif ch == "/" and depth == 0:
            parts.append(s[start:i])
            start = i + 1
    if depth:
        raise ValueError(f"unbalanced parentheses in {s!r}")
    parts.append(s[start:])
    return parts


def parse_scalar(text: str) -> Scalar:
    """Inverse of :func:`format_scalar`; also accepts a bare polynomial."""
    parts = _split_top_level(text.strip())
    if len(parts) == 1:
        return Scalar(parse_poly(parts[0]))
    if len(parts) == 2:
        den = parse_poly(parts[1])
        if den.is_zero():
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Scalar(parse_poly(parts[0]), den)
    raise ValueError(f"too many '/' in {text!r}")


# --------------------------------------------------------------------------
# determinants

R = TypeVar("R")


def bareiss_det(
    rows: Sequence[Sequence[R]],
    *,
    zero: R,
    one: R,
    mul: Callable[[R, R], R],
    sub: Callable[[R, R], R],
    exact_div: Callable[[R, R], R],
    is_zero: Callable[[R], bool],
) -> R:
    """Fraction-free determinant over an integral domain."""
    n = len(rows)
    if n == 0:
        return one
    a = [list(r) for r in rows]
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign = False
    prev = one
    for k in range(n - 1):
        if is_zero(a[k][k]):
            swap = next((i for i in range(k + 1, n) if not is_zero(a[i][k])), None)
            if swap is None:
                return zero
            a[k], a[swap] = a[swap], a[k]
            sign = not sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(sub(mul(row_i[j], akk), mul(aik, row_k[j])), prev)
            row_i[k] = zero
        prev = akk
    det = a[n - 1][n - 1]
    return sub(zero, det) if sign else det


def det_poly(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a matrix over Q[t] via Bareiss elimination in Z[t]."""
    scale = _ONE
    int_rows = []
    for r in rows:
        den = lcm(*(c.denominator for p in r for c in p.coeffs)) if any(not p.is_zero() for p in r) else 1
        int_rows.append([[int(c * den) for c in p.coeffs] for p in r])
        scale /= den
    d = bareiss_det(
        int_rows,
        zero=[],
        one=[1],
        mul=_zmul,
        sub=_zsub,
        exact_div=_zdiv_exact,
        is_zero=lambda p: not p,
    )
    return Poly(d) * scale


def det_rational(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    return bareiss_det(
        [[as_rational(x) for x in r] for r in rows],
        zero=_ZERO,
        one=_ONE,
        mul=lambda x, y: x * y,
        sub=lambda x, y: x - y,
        exact_div=lambda x, y: x / y,
        is_zero=lambda x: x == 0,
    )
