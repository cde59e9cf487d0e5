"""Chebyshev polynomials and small combinatorial helpers.

Everything here is exact-arithmetic friendly: the evaluation routines run
the three-term recurrences directly, so they accept ints, Fractions,
floats, or numpy arrays and return values in the same ring.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def cheb_t(m: int, x):
    """Evaluate the degree-m Chebyshev polynomial of the first kind.

    T_0 = 1, T_1 = x, T_m = 2x T_{m-1} - T_{m-2}.
    """
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if m == 0:
        return x * 0 + 1
    prev, cur = x * 0 + 1, x
    for _ in range(m - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def cheb_u(m: int, x):
    """Evaluate the degree-m Chebyshev polynomial of the second kind.

    U_0 = 1, U_1 = 2x, U_m = 2x U_{m-1} - U_{m-2}.
    """
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if m == 0:
        return x * 0 + 1
    prev, cur = x * 0 + 1, 2 * x
    for _ in range(m - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def parity_indicator(m: int) -> int:
    """Return 1 for even m and 0 for odd m."""
    return 1 - (m & 1)


def central_binomial_weight(k: int) -> Fraction:
    """Return binom(k, k/2) / 2^k for even k and 0 for odd k.

    This is the mean of cos^k over a full period, which is the Cesaro
    limit weight attached to each principal eigenvalue.
    """
    if k % 2:
        return Fraction(0)
    return Fraction(comb(k, k // 2), 2**k)


def cos_power_as_cosines(k: int) -> list[tuple[int, Fraction]]:
    """Expand cos^k(t) into a cosine series.

    Returns pairs (h, w) such that cos^k(t) = sum w * cos(h*t), with h
    running over k, k-2, ..., down to 1 (odd k) or 0 (even k).  The h = 0
    pair, when present, carries the constant term.
    """
    if k < 0:
        raise ValueError("power must be nonnegative")
    out = []
    half = Fraction(1, 2**k)
    for j in range((k // 2) + 1):
        h = k - 2 * j
        if h == 0:
            out.append((0, Fraction(comb(k, j), 2**k)))
        else:
            out.append((h, 2 * half * comb(k, j)))
    return out
