"""Exact arithmetic in the real field Q(sqrt2, sqrt3).

Every element is stored as four rationals ``(a, b, c, d)`` standing for
``a + b*sqrt2 + c*sqrt3 + d*sqrt6``.  Since ``1, sqrt2, sqrt3, sqrt6`` are
linearly independent over Q, equality is coefficient equality and hashing is
exact.
"""
from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

__all__ = ["Scalar", "scalar_sign", "parse_rational", "format_rational", "as_fraction"]

Number = Union["Scalar", int, Fraction]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction; raise ValueError otherwise."""
    if not isinstance(text, str):
        raise ValueError(f"rational must be a string, got {type(text).__name__}")
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _sign_q2(a: Fraction, b: Fraction) -> int:
    # sign of a + b*sqrt2
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    n = a * a - 2 * b * b
    return sa * ((n > 0) - (n < 0))


def _mul_q2(x: tuple[Fraction, Fraction], y: tuple[Fraction, Fraction]):
    return (x[0] * y[0] + 2 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


@total_ordering
class Scalar:
    """Element of Q(sqrt2, sqrt3) with exact field operations and ordering."""

    __slots__ = ("a", "b", "c", "d", "_hash")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Rational)):
            return cls(Fraction(x))
        if isinstance(x, str):
            return cls(parse_rational(x))
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    @classmethod
    def sqrt2(cls) -> "Scalar":
        return cls(0, 1)

    @classmethod
    def sqrt3(cls) -> "Scalar":
        return cls(0, 0, 1)

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is irrational")
        return self.a

    # arithmetic ------------------------------------------------------------
    def __add__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, -self.c, -self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        if not (b2 or c2 or d2):
            return Scalar(a1 * a2, b1 * a2, c1 * a2, d1 * a2)
        return Scalar(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
            a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero Scalar")
        if self.is_rational():
            return Scalar(1 / self.a)
        # x = p + q*sqrt3 with p, q in Q(sqrt2); 1/x = (p - q sqrt3) / (p^2 - 3 q^2)
        p = (self.a, self.b)
        q = (self.c, self.d)
        pp = _mul_q2(p, p)
        qq = _mul_q2(q, q)
        n = (pp[0] - 3 * qq[0], pp[1] - 3 * qq[1])
        # 1/(u + v sqrt2) = (u - v sqrt2)/(u^2 - 2 v^2)
        den = n[0] * n[0] - 2 * n[1] * n[1]
        ninv = (n[0] / den, -n[1] / den)
        top = _mul_q2(p, ninv)
        bot = _mul_q2(q, ninv)
        return Scalar(top[0], top[1], -bot[0], -bot[1])

    def __truediv__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_rational():
            if o.a == 0:
                raise ZeroDivisionError("division by zero Scalar")
            return Scalar(self.a / o.a, self.b / o.a, self.c / o.a, self.d / o.a)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (self.inverse()) ** (-k)
        result = Scalar(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ordering --------------------------------------------------------------
    def sign(self) -> int:
        if not (self.b or self.c or self.d):
            return (self.a > 0) - (self.a < 0)
        # x = p + q*sqrt3 with p = a + b sqrt2, q = c + d sqrt2
        sp = _sign_q2(self.a, self.b)
        sq = _sign_q2(self.c, self.d)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        pp = _mul_q2((self.a, self.b), (self.a, self.b))
        qq = _mul_q2((self.c, self.d), (self.c, self.d))
        return sp * _sign_q2(pp[0] - 3 * qq[0], pp[1] - 3 * qq[1])

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return (self.a == other.a and self.b == other.b
                    and self.c == other.c and self.d == other.d)
        if isinstance(other, (int, Rational)):
            return self.a == other and not (self.b or self.c or self.d)
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Scalar):
            if not (self.b or self.c or self.d or other.b or other.c or other.d):
                return self.a < other.a
            return (self - other).sign() < 0
        if isinstance(other, (int, Rational)):
            if not (self.b or self.c or self.d):
                return self.a < other
            return (self - other).sign() < 0
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not (self.b or self.c or self.d):
                self._hash = hash(self.a)
            else:
                self._hash = hash((self.a, self.b, self.c, self.d))
        return self._hash

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return (float(self.a) + float(self.b) * 2 ** 0.5
                + float(self.c) * 3 ** 0.5 + float(self.d) * 6 ** 0.5)

    def __repr__(self):
        if self.is_rational():
            return f"Scalar({format_rational(self.a)})"
        return "Scalar({})".format(", ".join(format_rational(x) for x in self.coefficients))

    def __str__(self):
        if self.is_rational():
            return format_rational(self.a)
        parts = []
        for coef, tag in zip(self.coefficients, ("", "*sqrt2", "*sqrt3", "*sqrt6")):
            if coef:
                parts.append(f"({format_rational(coef)}){tag}")
        return " + ".join(parts)

    # serialization ---------------------------------------------------------
    def to_json(self) -> dict:
        return {k: format_rational(v) for k, v in zip("abcd", self.coefficients)}

    @classmethod
    def from_json(cls, obj) -> "Scalar":
        if isinstance(obj, str):
            return cls(parse_rational(obj))
        if isinstance(obj, int) and not isinstance(obj, bool):
            return cls(obj)
        if not isinstance(obj, dict):
            raise ValueError(f"cannot decode Scalar from {obj!r}")
        unknown = set(obj) - set("abcd")
        if unknown:
            raise ValueError(f"unknown Scalar keys {sorted(unknown)}")
        return cls(*(parse_rational(obj.get(k, "0/1")) for k in "abcd"))


def scalar_sign(x) -> int:
    """Sign (-1, 0, +1) of the real number represented by ``x``."""
    return Scalar.coerce(x).sign()


def as_fraction(x) -> Fraction:
    """Coerce an int, Fraction, rational string or rational Scalar to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Scalar):
        return x.to_fraction()
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")
