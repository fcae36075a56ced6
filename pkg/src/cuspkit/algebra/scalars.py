"""Exact scalar types: rationals, the field with three elements, and Q(w).

Rationals are :class:`fractions.Fraction` throughout; they are normalized
on construction, so equality is structural.
"""
from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction
Scalar = Union[int, Fraction, "Eisenstein"]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals and floats are refused."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(r) -> str:
    r = as_rational(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


@total_ordering
class F3:
    """An element of the field with three elements, stored as 0, 1 or 2."""

    __slots__ = ("_v",)

    def __init__(self, value: int = 0) -> None:
        self._v = int(value) % 3

    @property
    def value(self) -> int:
        return self._v

    def __int__(self) -> int:
        return self._v

    def __index__(self) -> int:
        return self._v

    def __repr__(self) -> str:
        return f"F3({self._v})"

    def __str__(self) -> str:
        return str(self._v)

    def __hash__(self) -> int:
        return hash(("F3", self._v))

    def __eq__(self, other) -> bool:
        if isinstance(other, F3):
            return self._v == other._v
        if isinstance(other, int):
            return self._v == other % 3
        return NotImplemented

    def __lt__(self, other: F3) -> bool:
        return self._v < F3(other)._v

    def __bool__(self) -> bool:
        return self._v != 0

    def __add__(self, other) -> F3:
        if isinstance(other, (F3, int)):
            return F3(self._v + int(other))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> F3:
        if isinstance(other, (F3, int)):
            return F3(self._v - int(other))
        return NotImplemented

    def __rsub__(self, other) -> F3:
        if isinstance(other, int):
            return F3(other - self._v)
        return NotImplemented

    def __neg__(self) -> F3:
        return F3(-self._v)

    def __mul__(self, other) -> F3:
        if isinstance(other, (F3, int)):
            return F3(self._v * int(other))
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> F3:
        if self._v == 0:
            raise ZeroDivisionError("0 has no inverse in F3")
        # 1*1 = 1, 2*2 = 4 = 1
        return F3(self._v)

    def __truediv__(self, other) -> F3:
        return self * F3(other).inverse()

    def __pow__(self, k: int) -> F3:
        if k < 0:
            return self.inverse() ** (-k)
        return F3(pow(self._v, k, 3))


class Eisenstein:
    """``a + b*w`` with rational a, b and ``w**2 + w + 1 = 0``.

    Immutable and hashable. Mixes freely with ``int`` and ``Fraction``.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0) -> None:
        object.__setattr__(self, "a", as_rational(a))
        object.__setattr__(self, "b", as_rational(b))

    def __setattr__(self, name, value):
        raise AttributeError("Eisenstein is immutable")

    @classmethod
    def coerce(cls, x) -> Eisenstein:
        if isinstance(x, Eisenstein):
            return x
        return cls(as_rational(x), 0)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return self.b == 0

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> Eisenstein:
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return Eisenstein(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> Eisenstein:
        return Eisenstein(-self.a, -self.b)

    def __pos__(self) -> Eisenstein:
        return self

    def __sub__(self, other) -> Eisenstein:
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return Eisenstein(self.a - o.a, self.b - o.b)

    def __rsub__(self, other) -> Eisenstein:
        return -self + other

    def __mul__(self, other) -> Eisenstein:
        if isinstance(other, (int, Fraction)):
            return Eisenstein(self.a * other, self.b * other)
        if not isinstance(other, Eisenstein):
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        # w^2 = -1 - w
        bd = b * d
        return Eisenstein(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def conjugate(self) -> Eisenstein:
        # w -> w^2 = -1 - w
        return Eisenstein(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> Eisenstein:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(w)")
        c = self.conjugate()
        return Eisenstein(c.a / n, c.b / n)

    def __truediv__(self, other) -> Eisenstein:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(w)")
            return Eisenstein(self.a / other, self.b / other)
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> Eisenstein:
        return Eisenstein.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> Eisenstein:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Eisenstein(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Eisenstein):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"Eisenstein({format_rational(self.a)!r}, {format_rational(self.b)!r})"

    def __str__(self) -> str:
        return format_eisenstein(self)


OMEGA = Eisenstein(0, 1)


def omega_power(k: int) -> Eisenstein:
    """``w**k``; the exponent is reduced mod 3."""
    return (Eisenstein(1), OMEGA, Eisenstein(-1, -1))[k % 3]


def format_eisenstein(z) -> str:
    z = Eisenstein.coerce(z)
    b = format_rational(z.b)
    sign = "" if b.startswith("-") else "+"
    return f"{format_rational(z.a)}{sign}{b}*w"


def parse_eisenstein(text: str) -> Eisenstein:
    """Inverse of :func:`format_eisenstein`; plain rationals are accepted too."""
    text = text.strip().replace(" ", "")
    if not text.endswith("*w"):
        return Eisenstein(parse_rational(text))
    body = text[:-2]
    # split at the last sign that is not the leading one
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] != "/":
            return Eisenstein(parse_rational(body[:i]), parse_rational(body[i:].lstrip("+")))
    raise ValueError(f"not an Eisenstein literal: {text!r}")


def format_scalar(x) -> str:
    if isinstance(x, Eisenstein):
        return format_eisenstein(x)
    if isinstance(x, F3):
        return str(x)
    return format_rational(x)


def is_zero(x) -> bool:
    return x == 0
