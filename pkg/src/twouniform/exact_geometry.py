"""Exact arithmetic in Q(sqrt 3) and planar vectors/isometries over it.

Every vertex of a unit-edge tiling by triangles, squares, hexagons and
dodecagons whose edges point along multiples of 30 degrees has both
coordinates in Q(sqrt 3), so nothing here ever touches a float.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from functools import total_ordering
from typing import NamedTuple, Union

Rational = Union[int, Fraction]

__all__ = [
    "QuadExt",
    "Vec2",
    "Isometry",
    "ZERO",
    "ONE",
    "SQRT3",
    "qx_sign",
    "qx_arith",
    "angular_compare",
    "unit_direction",
    "rotate30",
    "compose",
    "apply",
]


@total_ordering
class QuadExt:
    """The number ``a + b*sqrt(3)`` with rational ``a`` and ``b``.

    Stored as integers ``(p + q*sqrt(3)) / d`` with ``d > 0`` and
    ``gcd(p, q, d) = 1``, which keeps the hot arithmetic free of Fraction
    overhead; ``a`` and ``b`` are exposed as Fractions in lowest terms.
    """

    __slots__ = ("_p", "_q", "_d", "_hash")

    def __init__(self, a: Rational = 0, b: Rational = 0) -> None:
        a, b = Fraction(a), Fraction(b)
        d = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        self._set(a.numerator * (d // a.denominator), b.numerator * (d // b.denominator), d)

    def _set(self, p: int, q: int, d: int) -> None:
        g = gcd(gcd(p, q), d)
        if d < 0:
            g = -g
        if g != 1:
            p, q, d = p // g, q // g, d // g
        self._p, self._q, self._d = p, q, d
        self._hash = hash((p, q, d))

    @classmethod
    def _raw(cls, p: int, q: int, d: int) -> "QuadExt":
        out = cls.__new__(cls)
        out._set(p, q, d)
        return out

    @property
    def a(self) -> Fraction:
        return Fraction(self._p, self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._q, self._d)

    @classmethod
    def coerce(cls, x: "QuadExt | Rational") -> "QuadExt":
        if isinstance(x, QuadExt):
            return x
        if isinstance(x, int):
            return cls._raw(x, 0, 1)
        if isinstance(x, Fraction):
            return cls._raw(x.numerator, 0, x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to QuadExt")

    def __repr__(self) -> str:
        return f"QuadExt({self.a}, {self.b})"

    def __str__(self) -> str:
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        if a == 0:
            return f"{b}*r3"
        sign = "+" if b > 0 else "-"
        return f"{a}{sign}{abs(b)}*r3"

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadExt.coerce(other)
        if not isinstance(other, QuadExt):
            return NotImplemented
        return self._p == other._p and self._q == other._q and self._d == other._d

    def __lt__(self, other: "QuadExt | Rational") -> bool:
        return qx_sign(self - QuadExt.coerce(other)) < 0

    def __bool__(self) -> bool:
        return bool(self._p) or bool(self._q)

    def __neg__(self) -> "QuadExt":
        return QuadExt._raw(-self._p, -self._q, self._d)

    def __add__(self, other: "QuadExt | Rational") -> "QuadExt":
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return QuadExt._raw(self._p + o._p, self._q + o._q, self._d)
        return QuadExt._raw(
            self._p * o._d + o._p * self._d, self._q * o._d + o._q * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __sub__(self, other: "QuadExt | Rational") -> "QuadExt":
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return QuadExt._raw(self._p - o._p, self._q - o._q, self._d)
        return QuadExt._raw(
            self._p * o._d - o._p * self._d, self._q * o._d - o._q * self._d, self._d * o._d
        )

    def __rsub__(self, other: "QuadExt | Rational") -> "QuadExt":
        return QuadExt.coerce(other) - self

    def __mul__(self, other: "QuadExt | Rational") -> "QuadExt":
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadExt._raw(
            self._p * o._p + 3 * self._q * o._q, self._p * o._q + self._q * o._p, self._d * o._d
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt._raw(self._p, -self._q, self._d)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 3 b^2``; zero only for zero."""
        return Fraction(self._p * self._p - 3 * self._q * self._q, self._d * self._d)

    def inverse(self) -> "QuadExt":
        # (p + q r3)/d inverts to d (p - q r3) / (p^2 - 3 q^2)
        n = self._p * self._p - 3 * self._q * self._q
        if n == 0:
            raise ZeroDivisionError("QuadExt division by zero")
        return QuadExt._raw(self._d * self._p, -self._d * self._q, n)

    def __truediv__(self, other: "QuadExt | Rational") -> "QuadExt":
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: "QuadExt | Rational") -> "QuadExt":
        return QuadExt.coerce(other) * self.inverse()

    def to_decimal(self, digits: int = 12) -> str:
        """Decimal rendering with ``digits`` places, computed from exact data."""
        from decimal import Decimal, localcontext

        with localcontext() as ctx:
            ctx.prec = digits + 30
            val = Decimal(self.a.numerator) / Decimal(self.a.denominator)
            val += Decimal(self.b.numerator) / Decimal(self.b.denominator) * Decimal(3).sqrt()
            q = Decimal(1).scaleb(-digits)
            out = val.quantize(q)
            if out == 0:
                out = abs(out)
            return f"{out:f}"

    def __float__(self) -> float:
        # For display and plotting only; the core never branches on this.
        return float(self.a) + float(self.b) * 3 ** 0.5


ZERO = QuadExt(0)
ONE = QuadExt(1)
HALF = QuadExt(Fraction(1, 2))
SQRT3 = QuadExt(0, 1)


def qx_sign(u: QuadExt) -> int:
    """Exact sign of ``a + b*sqrt(3)``."""
    # the denominator is positive, so the numerators carry the signs
    p, q = u._p, u._q
    sa = (p > 0) - (p < 0)
    sb = (q > 0) - (q < 0)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with 3 b^2
    lhs = p * p
    rhs = 3 * q * q
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return 0  # unreachable for rational a, b: sqrt 3 is irrational


def qx_arith(op: str, u: QuadExt, v: QuadExt) -> QuadExt:
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    if op == "div":
        return u / v
    raise ValueError(f"unknown op {op!r}")


class Vec2(NamedTuple):
    x: QuadExt
    y: QuadExt

    @classmethod
    def of(cls, x: "QuadExt | Rational", y: "QuadExt | Rational") -> "Vec2":
        return cls(QuadExt.coerce(x), QuadExt.coerce(y))

    def __add__(self, other: "Vec2") -> "Vec2":  # type: ignore[override]
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def scale(self, k: "QuadExt | Rational") -> "Vec2":
        return Vec2(self.x * k, self.y * k)

    def __mul__(self, k: "QuadExt | Rational") -> "Vec2":  # type: ignore[override]
        return self.scale(k)

    __rmul__ = __mul__

    def dot(self, other: "Vec2") -> QuadExt:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> QuadExt:
        return self.x * other.y - self.y * other.x

    def norm2(self) -> QuadExt:
        return self.dot(self)

    def is_zero(self) -> bool:
        return not self.x and not self.y

    def rotate90(self) -> "Vec2":
        return Vec2(-self.y, self.x)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


_COS30 = [
    QuadExt(1),
    QuadExt(0, Fraction(1, 2)),
    QuadExt(Fraction(1, 2)),
    QuadExt(0),
    QuadExt(Fraction(-1, 2)),
    QuadExt(0, Fraction(-1, 2)),
    QuadExt(-1),
    QuadExt(0, Fraction(-1, 2)),
    QuadExt(Fraction(-1, 2)),
    QuadExt(0),
    QuadExt(Fraction(1, 2)),
    QuadExt(0, Fraction(1, 2)),
]


def unit_direction(k: int) -> Vec2:
    """Unit vector at angle ``30*k`` degrees."""
    k %= 12
    return Vec2(_COS30[k], _COS30[(k - 3) % 12])


def rotate30(p: Vec2, k: int, reflect: bool = False) -> Vec2:
    """Rotate ``p`` by ``30*k`` degrees, after mirroring in the x axis if asked."""
    c = unit_direction(k)
    x, y = p.x, (-p.y if reflect else p.y)
    return Vec2(c.x * x - c.y * y, c.y * x + c.x * y)


def _half_plane(d: Vec2) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2 pi)
    sy = qx_sign(d.y)
    if sy > 0:
        return 0
    if sy < 0:
        return 1
    return 0 if qx_sign(d.x) > 0 else 1


def angular_compare(d1: Vec2, d2: Vec2) -> int:
    """Compare directions by CCW angle in [0, 2 pi) from (1, 0).

    Returns -1, 0 or 1.  Parallel vectors with the same orientation compare
    equal whatever their lengths.
    """
    if d1.is_zero() or d2.is_zero():
        raise ValueError("angular_compare: zero vector has no direction")
    h1, h2 = _half_plane(d1), _half_plane(d2)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    c = qx_sign(d1.cross(d2))
    return -c


class Isometry(NamedTuple):
    """The map ``x -> eps*x + t`` with ``eps`` in {+1, -1}."""

    eps: int
    t: Vec2

    @classmethod
    def identity(cls) -> "Isometry":
        return cls(1, Vec2(ZERO, ZERO))

    @classmethod
    def translation(cls, t: Vec2) -> "Isometry":
        return cls(1, t)

    def __call__(self, p: Vec2) -> Vec2:
        return apply(self, p)

    def inverse(self) -> "Isometry":
        return Isometry(self.eps, (-self.t).scale(self.eps))

    def power(self, k: int) -> "Isometry":
        """Integer power, only meaningful for translations and involutions."""
        if self.eps == 1:
            return Isometry(1, self.t.scale(k))
        return self if k % 2 else Isometry.identity()


def apply(g: Isometry, p: Vec2) -> Vec2:
    return p.scale(g.eps) + g.t


def compose(g: Isometry, h: Isometry) -> Isometry:
    """``g o h``: first h, then g."""
    return Isometry(g.eps * h.eps, h.t.scale(g.eps) + g.t)
