"""Truncated power series over exact rationals or doubles.

A TruncatedSeries holds coefficients c_0..c_M.  Arithmetic between two
series truncates to the smaller order.  The coefficient ring is
whatever the inputs live in: Fractions and ints stay exact, floats make
the mode flag flip to "float".  exp and log use the standard
derivative-recursion, so they stay within the ring generated by the
coefficients (division only by integers).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def _is_exact(values) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple
    order: int
    mode: str

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, order: int | None = None) -> "TruncatedSeries":
        cs = list(coeffs)
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(cs) < order + 1:
            cs.extend([0] * (order + 1 - len(cs)))
        cs = cs[: order + 1]
        return cls(tuple(cs), order, "exact" if _is_exact(cs) else "float")

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([1], order)

    def __getitem__(self, m: int):
        return self.coeffs[m]

    def _with(self, coeffs) -> "TruncatedSeries":
        return TruncatedSeries.from_coeffs(coeffs, len(coeffs) - 1)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.order, other.order)
        return self._with([self.coeffs[i] + other.coeffs[i] for i in range(m + 1)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.order, other.order)
        return self._with([self.coeffs[i] - other.coeffs[i] for i in range(m + 1)])

    def __neg__(self) -> "TruncatedSeries":
        return self._with([-c for c in self.coeffs])

    def scale(self, c) -> "TruncatedSeries":
        return self._with([c * x for x in self.coeffs])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.order, other.order)
        out = [0] * (m + 1)
        for i, a in enumerate(self.coeffs[: m + 1]):
            if a == 0:
                continue
            for j in range(m + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return self._with(out)

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series has zero constant term")
        inv0 = Fraction(1) / Fraction(c0) if self.mode == "exact" else 1.0 / c0
        out = [inv0]
        for m in range(1, self.order + 1):
            acc = 0
            for k in range(1, m + 1):
                acc += self.coeffs[k] * out[m - k]
            out.append(-acc * inv0)
        return self._with(out)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self * other.inverse()

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries.from_coeffs([0], 0)
        return TruncatedSeries.from_coeffs(
            [i * self.coeffs[i] for i in range(1, self.order + 1)], self.order - 1
        )

    def exp(self) -> "TruncatedSeries":
        if self.coeffs[0] != 0:
            raise ValueError("exp needs zero constant term")
        exact = self.mode == "exact"
        out = [Fraction(1) if exact else 1.0]
        for m in range(1, self.order + 1):
            acc = 0
            for k in range(1, m + 1):
                acc += k * self.coeffs[k] * out[m - k]
            out.append((Fraction(acc) if exact else acc) / m)
        return self._with(out)

    def log(self) -> "TruncatedSeries":
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        exact = self.mode == "exact"
        out = [Fraction(0) if exact else 0.0]
        for m in range(1, self.order + 1):
            acc = 0
            for k in range(1, m):
                acc += k * out[k] * self.coeffs[m - k]
            val = self.coeffs[m] - (Fraction(acc) if exact else acc) / m
            out.append(val)
        return self._with(out)

    def scale_argument(self, c) -> "TruncatedSeries":
        """Substitute t -> c*t, i.e. multiply c_k by c^k."""
        out = []
        power = 1
        for k in range(self.order + 1):
            out.append(self.coeffs[k] * power)
            power = power * c
        return self._with(out)

    def evaluate(self, t):
        """Horner evaluation of the truncated polynomial at t."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries.from_coeffs(self.coeffs[: order + 1], order)

    def as_floats(self) -> list[float]:
        return [float(c) for c in self.coeffs]


def geometric_series(ratio, order: int) -> TruncatedSeries:
    """1/(1 - ratio*t) truncated at the given order."""
    out = [1]
    for _ in range(order):
        out.append(out[-1] * ratio)
    return TruncatedSeries.from_coeffs(out, order)


def binomial_one_minus_u2(exponent: int, order: int) -> TruncatedSeries:
    """(1 - u^2)^exponent as a truncated series, any integer exponent."""
    from math import comb

    out = [0] * (order + 1)
    if exponent >= 0:
        for j in range(min(exponent, order // 2) + 1):
            out[2 * j] = (-1) ** j * comb(exponent, j)
    else:
        k = -exponent
        for j in range(order // 2 + 1):
            out[2 * j] = comb(k - 1 + j, j)
    return TruncatedSeries.from_coeffs(out, order)
