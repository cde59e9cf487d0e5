"""Exact arithmetic in Q(sqrt(d)).

Numbers of the form a + b*sqrt(d) with rational a, b.  Half-integer
powers of an integer live here exactly, which is what keeps residuals
like sum(N_m q^{-m/2}) - main_term meaningful: the quantities being
subtracted can exceed 1e15 while the difference is O(1), far below the
resolution of double arithmetic.

A perfect-square d folds into plain rationals (b stays zero), so q = 1
graphs work through the same code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, sqrt


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class SqrtExt:
    """a + b*sqrt(d) with exact rational a, b and a fixed nonnegative integer d."""

    d: int
    a: Fraction
    b: Fraction

    @classmethod
    def of(cls, d: int, a=0, b=0) -> "SqrtExt":
        if d < 0:
            raise ValueError("d must be nonnegative")
        a = _as_fraction(a)
        b = _as_fraction(b)
        r = isqrt(d)
        if r * r == d:
            # perfect square: fold the irrational part away
            return cls(d, a + b * r, Fraction(0))
        return cls(d, a, b)

    def _check(self, other: "SqrtExt") -> None:
        if self.d != other.d:
            raise ValueError(f"mixed radicands {self.d} and {other.d}")

    def _coerce(self, other) -> "SqrtExt":
        if isinstance(other, SqrtExt):
            self._check(other)
            return other
        return SqrtExt.of(self.d, _as_fraction(other))

    def __add__(self, other) -> "SqrtExt":
        o = self._coerce(other)
        return SqrtExt.of(self.d, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other) -> "SqrtExt":
        o = self._coerce(other)
        return SqrtExt.of(self.d, self.a - o.a, self.b - o.b)

    def __rsub__(self, other) -> "SqrtExt":
        return self._coerce(other) - self

    def __neg__(self) -> "SqrtExt":
        return SqrtExt.of(self.d, -self.a, -self.b)

    def __mul__(self, other) -> "SqrtExt":
        o = self._coerce(other)
        return SqrtExt.of(
            self.d, self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SqrtExt":
        o = self._coerce(other)
        norm = o.a * o.a - self.d * o.b * o.b
        if norm == 0:
            raise ZeroDivisionError("division by zero element")
        # multiply by the conjugate of the divisor
        num = self * SqrtExt.of(self.d, o.a, -o.b)
        return SqrtExt.of(self.d, num.a / norm, num.b / norm)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, SqrtExt):
            return self.d == other.d and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.d, self.a, self.b))

    def is_rational(self) -> bool:
        return self.b == 0

    def rational_part(self) -> Fraction:
        return self.a

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * sqrt(self.d)

    def __repr__(self) -> str:
        if self.b == 0:
            return f"{self.a}"
        return f"({self.a} + {self.b}*sqrt({self.d}))"


def half_power(d: int, m: int) -> SqrtExt:
    """d^{m/2} as an exact SqrtExt over sqrt(d); m may be negative."""
    if m >= 0:
        whole = d ** (m // 2)
        if m % 2 == 0:
            return SqrtExt.of(d, whole)
        return SqrtExt.of(d, 0, whole)
    if d == 0:
        raise ZeroDivisionError("negative power of 0")
    pos = half_power(d, -m)
    return SqrtExt.of(d, 1) / pos
