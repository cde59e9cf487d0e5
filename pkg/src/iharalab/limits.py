"""Limit theorems, trace formula checks, and positivity sequences.

This module turns the asymptotic statements about regular graphs into
finite, falsifiable computations:

* Cesaro averages of powers of the bounded matrices a_m and s_m against
  their closed-form limits, with an O(1/N) rate band.
* The average of N_m / q^{m/2} against its main terms.
* The average of normalized cusp coefficients a(p^m)/(2 p^{m/2}).
* A Selberg-type trace formula for finite-support test functions.
* Huang's h_m sequence, nonnegative at even indices exactly when the
  graph is Ramanujan.

Rate bands compare |deviation| * N against 4 times an explicit
reference constant derived from the partial-sum bound
|sum_{m<=N} cos(m phi)| <= 1/|sin(phi/2)| + 1/2.  The reference
constant is what the proofs actually control; the observed max/min
ratio across horizons is reported as a diagnostic but oscillatory
near-zeros make it unusable as a pass/fail gate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.integrate import quad

from .chebyshev import central_binomial_weight, cos_power_as_cosines
from .errors import AngleConditionViolated, NotRamanujan, QuadratureFailure
from .graphs import Graph, RegularityCertificate
from .nbt import cheb_t_real, n_reduced_range
from .qext import SqrtExt, half_power
from .zeta import cusp_coefficients_range


# ---------------------------------------------------------------------------
# partial-sum bounds and reference constants


def cos_partial_sum_bound(phi: float) -> float:
    """Bound for |sum_{m=1}^{N} cos(m phi)|, uniform in N, for phi not in 2 pi Z."""
    return 1.0 / abs(math.sin(phi / 2.0)) + 0.5


def shifted_cos_partial_sum_bound(phi: float) -> float:
    """Bound for |sum_{m=1}^{N} cos((m+1) phi)|, uniform in N.

    The shift drops the m = 1 term from the full sum starting at 1, so
    the closed-form bound 1/|sin(phi/2)| picks up at most 1.
    """
    return 1.0 / abs(math.sin(phi / 2.0)) + 1.0


def _harmonics(k: int) -> list[int]:
    """The nonzero frequencies k, k-2, ... appearing in cos^k and sin^k."""
    return [k - 2 * j for j in range((k + 1) // 2)]


def angle_condition(sd, k: int, tol: float = 1e-9) -> bool:
    """Check that no harmonic of a principal angle degenerates.

    The averaged quantity (1/N) sum cos^k(m theta) converges at rate 1/N
    only when (k-2j) theta stays off 2 pi Z for every frequency k-2j > 0
    appearing in the power expansion; a single resonant frequency
    contributes a non-vanishing constant and destroys the rate.  Angles
    are tested within the given absolute tolerance.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    for cl in sd.principal():
        th = cl.theta.real
        for h in _harmonics(k):
            frac = (h * th) % (2.0 * math.pi)
            if min(frac, 2.0 * math.pi - frac) < tol:
                return False
    return True


def cesaro_reference(sd, k: int, variant: str) -> float:
    """Explicit O(1/N) constant for the Cesaro deviation, from the proofs.

    For each principal cluster the deviation of the scalar average is at
    most (1/N) * sum over frequencies of weight * partial-sum bound; the
    Euclidean matrix norm then aggregates with sqrt(multiplicity).
    Infinite when the angle condition fails, which is exactly when no
    finite constant exists.
    """
    total = 0.0
    for cl in sd.principal():
        th = cl.theta.real
        per = 0.0
        for h, w in cos_power_as_cosines(k):
            if h == 0:
                continue
            # same resonance test as angle_condition, so the constant is
            # finite exactly when the gate passes
            frac = (h * th) % (2.0 * math.pi)
            if min(frac, 2.0 * math.pi - frac) < 1e-9:
                return math.inf
            if variant == "a":
                per += float(w) * cos_partial_sum_bound(h * th)
            elif variant == "s":
                per += float(w) * shifted_cos_partial_sum_bound(h * th) / math.sin(th) ** k
            else:
                raise ValueError(f"unknown variant {variant!r}")
        total += cl.mult * per * per
    return math.sqrt(total)


def require_ramanujan(sd) -> None:
    """Raise NotRamanujan unless all non-trivial eigenvalues are tempered."""
    q = sd.q
    root = 2.0 * math.sqrt(q)
    for cl in sd.singular():
        lam = cl.value
        near_trivial = abs(abs(lam) - (q + 1)) <= sd.cluster_tol
        near_root = abs(abs(lam) - root) <= sd.cluster_tol
        if not (near_trivial or near_root):
            raise NotRamanujan(f"eigenvalue {lam} violates |lambda| <= 2 sqrt(q)")


# ---------------------------------------------------------------------------
# Cesaro averages


@dataclass(frozen=True)
class CesaroReport:
    """Deviation-vs-horizon report for one Cesaro limit."""

    k: int
    variant: str
    N_values: tuple[int, ...]
    deviations: tuple[float, ...]
    rate_estimate: float | None
    limit_constant: Fraction
    reference_constant: float
    scaled_deviations: tuple[float, ...] = field(default=())

    def within_band(self, factor: float = 4.0) -> bool:
        """True when max |deviation|*N stays below factor * reference."""
        if not self.scaled_deviations:
            return True
        return max(self.scaled_deviations) <= factor * self.reference_constant

    def band_ratio(self) -> float:
        """Diagnostic max/min of |deviation|*N; inf when a deviation is 0."""
        if not self.scaled_deviations or min(self.scaled_deviations) == 0.0:
            return math.inf
        return max(self.scaled_deviations) / min(self.scaled_deviations)


def _validate_horizons(horizons: Sequence[int]) -> list[int]:
    hs = list(horizons)
    if not hs or any(h < 1 for h in hs) or any(b <= a for a, b in zip(hs, hs[1:])):
        raise ValueError("horizons must be a strictly increasing list of positive ints")
    return hs


def _rate_estimate(ns: list[int], devs: list[float]) -> float | None:
    if any(d <= 0.0 for d in devs) or len(ns) < 2:
        return None
    xs = np.log(np.array(ns, dtype=float))
    ys = np.log(np.array(devs, dtype=float))
    slope = np.polyfit(xs, ys, 1)[0]
    return float(slope)


def _cesaro_run(sd, k: int, horizons: Sequence[int], variant: str) -> CesaroReport:
    if not angle_condition(sd, k):
        raise AngleConditionViolated(
            f"a principal angle resonates at moment order k={k}; the averaged limit fails"
        )
    ns = _validate_horizons(horizons)
    n_max = ns[-1]
    weight = central_binomial_weight(k)
    devs = []
    principal = sd.principal()
    # per-cluster scalar averages; the matrix deviation follows from
    # projector orthogonality: ||sum d P||_F = sqrt(sum mult * d^2)
    cums = []
    targets = []
    for cl in principal:
        th = cl.theta.real
        m = np.arange(1, n_max + 1, dtype=float)
        if variant == "a":
            scal = np.cos(m * th) ** k
            target = float(weight)
        else:
            scal = (np.sin((m + 1) * th) / math.sin(th)) ** k
            target = float(weight) / math.sin(th) ** k
        cums.append(np.cumsum(scal))
        targets.append(target)
    for N in ns:
        acc = 0.0
        for cl, cum, target in zip(principal, cums, targets):
            d = cum[N - 1] / N - target
            acc += cl.mult * d * d
        devs.append(math.sqrt(acc))
    return CesaroReport(
        k=k,
        variant=variant,
        N_values=tuple(ns),
        deviations=tuple(devs),
        rate_estimate=_rate_estimate(ns, devs),
        limit_constant=weight,
        reference_constant=cesaro_reference(sd, k, variant),
        scaled_deviations=tuple(d * N for d, N in zip(devs, ns)),
    )


def cesaro_a(sd, k: int, horizons: Sequence[int]) -> CesaroReport:
    """Cesaro average of a_m^k against (e_k binom(k,k/2)/2^k) sum P_lambda."""
    return _cesaro_run(sd, k, horizons, "a")


def cesaro_s(sd, k: int, horizons: Sequence[int]) -> CesaroReport:
    """Cesaro average of s_m^k against the sin^{-k}-weighted limit."""
    return _cesaro_run(sd, k, horizons, "s")


def cesaro_matrix_average(sd, k: int, N: int, variant: str = "a") -> np.ndarray:
    """(1/N) sum_{m<=N} a_m^k (or s_m^k) as an explicit matrix.

    Slow reference route used to validate the scalar shortcut in
    _cesaro_run; k-th powers of the spectral matrices reduce to k-th
    powers of scalars because the projectors are orthogonal idempotents.
    """
    out = np.zeros((sd.n, sd.n))
    for m in range(1, N + 1):
        acc = np.zeros((sd.n, sd.n))
        for cl in sd.principal():
            th = cl.theta.real
            if variant == "a":
                s = math.cos(m * th)
            else:
                s = math.sin((m + 1) * th) / math.sin(th)
            acc += (s**k) * cl.projector
        out += acc
    return out / N


# ---------------------------------------------------------------------------
# averaged N_m asymptotics


@dataclass(frozen=True)
class AverageNmReport:
    N: int
    lhs: float
    main_terms: float
    residual: float
    scaled_residual: float
    reference_constant: float


def average_nm_reference(sd, cert: RegularityCertificate) -> float:
    """Bound for |residual| * N from the proofs' partial-sum estimates.

    The exact residual decomposes into principal Dirichlet-kernel sums
    (bounded by the cos partial-sum bound per eigenvalue), a geometric
    branch constant, and O(1) corrections of size n and 2 m(-2 sqrt q).
    """
    q = sd.q
    if q < 2:
        raise ValueError("main-term formula needs q >= 2")
    total = 0.0
    for cl in sd.principal():
        total += 2.0 * cl.mult * cos_partial_sum_bound(cl.theta.real)
    rq = math.sqrt(q)
    if cert.bipartite:
        branch = 2.0 * (q + 1) / (q - 1)
    else:
        branch = (rq + 1.0) / (rq - 1.0)
    total += branch + sd.n + 2.0 * sd.multiplicity_at(-2.0 * rq)
    return total


def average_nm(
    g: Graph, cert: RegularityCertificate, sd, N: int, *, counts: list[int] | None = None
) -> AverageNmReport:
    """Average of N_m / q^{m/2} for m <= N against its main terms.

    lhs and main terms are assembled exactly in Q(sqrt q); the two
    nearly cancel (both grow like q^{N/2}/N), so float subtraction of
    separately rounded sides would lose the O(1/N) residual entirely at
    realistic q and N.  Main terms follow the bipartite branch
    (1/N) 2 q^{floor(N/2)+1}/(q-1) or the non-bipartite branch
    (1/N) q^{(N+1)/2}/(sqrt q - 1), minus twice the multiplicity of
    2 sqrt q.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    require_ramanujan(sd)
    q = cert.q
    if q < 2:
        raise ValueError("main-term formula needs q >= 2")
    if counts is None:
        counts = n_reduced_range(g, cert, N)
    if len(counts) < N:
        raise ValueError("counts shorter than horizon")
    total = SqrtExt.of(q, 0)
    for m in range(1, N + 1):
        nm = counts[m - 1]
        if nm:
            total = total + nm * half_power(q, -m)
    lhs = total / N
    m_pos_root = sd.multiplicity_at(2.0 * math.sqrt(q))
    if cert.bipartite:
        main = SqrtExt.of(q, Fraction(2 * q ** (N // 2 + 1), q - 1)) / N
    else:
        main = half_power(q, N + 1) / SqrtExt.of(q, -1, 1) / N
    main = main - 2 * m_pos_root
    residual = lhs - main
    return AverageNmReport(
        N=N,
        lhs=float(lhs),
        main_terms=float(main),
        residual=float(residual),
        scaled_residual=float(residual) * N,
        reference_constant=average_nm_reference(sd, cert),
    )


def average_nm_sweep(
    g: Graph, cert: RegularityCertificate, sd, horizons: Sequence[int]
) -> list[AverageNmReport]:
    """average_nm at several horizons off one exact N_m sweep."""
    ns = _validate_horizons(horizons)
    counts = n_reduced_range(g, cert, ns[-1])
    return [average_nm(g, cert, sd, N, counts=counts) for N in ns]


# ---------------------------------------------------------------------------
# averaged cusp coefficients


def cusp_term_bound(sd) -> float:
    """Spectral bound for each |a(p^m)|/(2 p^{m/2}): (1/n) sum mult/sin(theta)."""
    total = 0.0
    for cl in sd.principal():
        total += cl.mult / math.sin(cl.theta.real)
    return total / sd.n


def average_cusp_reference(sd) -> float:
    """Bound for |average| * N: shifted partial sums weighted by 1/sin(theta)."""
    total = 0.0
    for cl in sd.principal():
        th = cl.theta.real
        total += cl.mult * shifted_cos_partial_sum_bound(th) / math.sin(th)
    return total / sd.n


def average_cusp(
    g_lps: Graph, params, N: int, sd=None, *, normalized: list[Fraction] | None = None
) -> tuple[float, dict]:
    """Average of a(p^m)/(2 p^{m/2}) over m <= N, with its rate bound.

    Returns (average, report).  The report carries |average| * N and the
    reference constant the partial-sum bound gives for it.
    """
    if sd is None:
        from .graphs import certify_regular
        from .spectral import eigendecompose

        sd = eigendecompose(g_lps, certify_regular(g_lps))
    if normalized is None:
        normalized = normalized_cusp_terms(g_lps, params, N)
    if len(normalized) < N + 1:
        raise ValueError("normalized terms shorter than horizon")
    total = sum(normalized[1 : N + 1], Fraction(0))
    average = float(total) / N
    report = {
        "scaled_average": abs(average) * N,
        "reference_constant": average_cusp_reference(sd),
        "term_bound": cusp_term_bound(sd),
        "max_term": max(abs(float(t)) for t in normalized[1 : N + 1]),
    }
    return average, report


def normalized_cusp_terms(g_lps: Graph, params, m_max: int) -> list[Fraction]:
    """[a(p^m)/(2 p^{m/2}) for m = 0..m_max] as exact rationals.

    Odd-m terms are zero on bipartite LPS graphs; on non-bipartite ones
    they involve sqrt(p) and this helper refuses rather than round.
    """
    amounts = cusp_coefficients_range(g_lps, params, m_max)
    p = params.p
    out = []
    for m, a in enumerate(amounts):
        value = SqrtExt.of(p, a) / (2 * half_power(p, m))
        if not value.is_rational():
            raise ValueError("normalized cusp term is irrational; use float route")
        out.append(value.rational_part())
    return out


# ---------------------------------------------------------------------------
# trace formula


@dataclass(frozen=True)
class StfTestFunction:
    """Finite-support even test function h(theta) = hhat0 + sum 2 hhat(m) cos(m theta)."""

    hhat0: float = 0.0
    support: tuple[tuple[int, float], ...] = ()

    @classmethod
    def single(cls, m: int, value: float = 1.0) -> "StfTestFunction":
        if m == 0:
            return cls(hhat0=value)
        return cls(support=((m, value),))

    def max_frequency(self) -> int:
        return max((m for m, _ in self.support), default=0)

    def eval_theta(self, theta: float) -> float:
        return self.hhat0 + sum(2.0 * v * math.cos(m * theta) for m, v in self.support)

    def eval_x(self, x: float) -> float:
        """h at the angle with cos(theta) = x, via Chebyshev values.

        Valid for |x| > 1 too (complex theta), where cos(m theta)
        continues to T_m(x).
        """
        return self.hhat0 + sum(2.0 * v * cheb_t_real(m, x) for m, v in self.support)


def stf_verify(
    g: Graph, cert: RegularityCertificate, sd, h: StfTestFunction
) -> tuple[float, float, float]:
    """Check the trace formula: spectral side vs. identity + cycle terms.

    lhs = sum_clusters mult * h(theta); geometric side =
    (2 n q (q+1)/pi) Integral_0^pi sin^2(theta)/((q+1)^2 - 4q cos^2 theta) h(theta) d theta
    + sum_m N_m q^{-m/2} hhat(m).  Returns (lhs, geometric, |difference|).
    """
    q = cert.q
    lhs = 0.0
    for cl in sd.clusters:
        lhs += cl.mult * h.eval_x(cl.value / (2.0 * math.sqrt(q)))

    def integrand(theta: float) -> float:
        s = math.sin(theta)
        c = math.cos(theta)
        return s * s / ((q + 1) ** 2 - 4.0 * q * c * c) * h.eval_theta(theta)

    result = quad(integrand, 0.0, math.pi, epsabs=1e-10, limit=200, full_output=1)
    if len(result) > 3:
        raise QuadratureFailure(f"quadrature did not converge: {result[3]}")
    integral, abserr = result[0], result[1]
    if abserr > 1e-8:
        raise QuadratureFailure(f"quadrature error estimate {abserr} exceeds 1e-8")
    geometric = (2.0 * g.n * q * (q + 1) / math.pi) * integral
    if h.support:
        m_max = h.max_frequency()
        counts = n_reduced_range(g, cert, m_max)
        for m, v in h.support:
            geometric += counts[m - 1] * q ** (-m / 2.0) * v
    return lhs, geometric, abs(lhs - geometric)


# ---------------------------------------------------------------------------
# Huang's positivity sequence


def huang_range(g: Graph, cert: RegularityCertificate, m_max: int) -> list[float]:
    """[h_1..h_{m_max}] from the exact branch formulas.

    Non-bipartite: h_m = 2(n-1) + n e_m (q-1)/q^{m/2}
                         + (q^{m/2} + q^{-m/2}) - N_m/q^{m/2}.
    Bipartite:     h_m = 2(n-2) + n e_m (q-1)/q^{m/2}
                         + 2 e_m (q^{m/2} + q^{-m/2}) - N_m/q^{m/2}.
    (2 T_m((q+1)/(2 sqrt q)) = q^{m/2} + q^{-m/2} exactly, which keeps
    everything in Q(sqrt q); the float conversion happens only at the
    very end.)
    """
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    q = cert.q
    n = g.n
    counts = n_reduced_range(g, cert, m_max)
    out = []
    for m in range(1, m_max + 1):
        e_m = 1 if m % 2 == 0 else 0
        qneg = half_power(q, -m)
        bridge = half_power(q, m) + qneg
        if cert.bipartite:
            val = 2 * (n - 2) + n * e_m * (q - 1) * qneg + 2 * e_m * bridge - counts[m - 1] * qneg
        else:
            val = 2 * (n - 1) + n * e_m * (q - 1) * qneg + bridge - counts[m - 1] * qneg
        out.append(float(val))
    return out


def huang_h(g: Graph, cert: RegularityCertificate, sd, m: int) -> float:
    """Huang's h_m; nonnegative at even m exactly when g is Ramanujan."""
    return huang_range(g, cert, m)[m - 1]
