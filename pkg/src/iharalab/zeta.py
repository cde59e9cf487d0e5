"""Ihara zeta functions and the cusp-coefficient generating function.

The zeta function of a finite connected graph is determined by its
reduced-cycle counts, Z(u) = exp(sum_m N_m u^m / m), and equals the
reciprocal of (1-u^2)^{r-1} det(I - uA + u^2(D-I)) with r the first
Betti number.  This module computes both sides exactly, plus the
Eisenstein/cusp coefficient split for LPS graphs and the generating
function phi(t) of normalized cusp coefficients, by two independent
routes (spectral trace data vs. the zeta log-derivative closed form).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InvalidPrime, NotRegular
from .graphs import Graph, RegularityCertificate, certify_regular
from .lps import LpsParams, is_prime, legendre_symbol
from .nbt import adjacency_power_traces, n_reduced_range, t_tilde_traces
from .oracle import count_reduced_cycles_all
from .qext import SqrtExt, half_power
from .series import TruncatedSeries, binomial_one_minus_u2


# ---------------------------------------------------------------------------
# Ihara-Bass determinant side


def bareiss_determinant(mat: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free Gaussian elimination."""
    n = len(mat)
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            rik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - rik * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class ZetaReciprocal:
    """Z(u)^{-1} in factored form: (1-u^2)^{betti_r - 1} * det_poly(u)."""

    betti_r: int
    det_coeffs: tuple[int, ...]
    n: int

    def series(self, order: int) -> TruncatedSeries:
        det = TruncatedSeries.from_coeffs(list(self.det_coeffs), order)
        return binomial_one_minus_u2(self.betti_r - 1, order) * det

    def zeta_series(self, order: int) -> TruncatedSeries:
        return self.series(order).inverse()


def _det_point(g: Graph, degrees: list[int], u: int) -> int:
    n = g.n
    mat = [
        [
            (1 + u * u * (degrees[i] - 1) if i == j else 0) - u * g.adj[i][j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return bareiss_determinant(mat)


def _interpolate_integer_poly(points: list[tuple[int, int]]) -> list[int]:
    """Exact polynomial through the given points; must have integer coefficients."""
    k = len(points)
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    # Newton divided differences
    table = ys[:]
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    # expand Newton form to monomial coefficients
    coeffs = [Fraction(0)] * k
    poly = [Fraction(1)]  # running product (x - x_0)...(x - x_{level-1})
    for level in range(k):
        for j, c in enumerate(poly):
            coeffs[j] += table[level] * c
        new_poly = [Fraction(0)] * (len(poly) + 1)
        for j, c in enumerate(poly):
            new_poly[j] -= xs[level] * c
            new_poly[j + 1] += c
        poly = new_poly
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError(f"interpolation produced non-integer coefficient {c}")
        out.append(int(c))
    return out


def ihara_bass_reciprocal(g: Graph) -> ZetaReciprocal:
    """Exact reciprocal zeta polynomial data for any connected graph.

    The determinant det(I - uA + u^2(D-I)) is found by evaluating at the
    2n+1 integer points u = 0, +-1, ..., +-n with exact integer
    elimination and interpolating; regularity is not assumed.
    """
    degrees = [g.degree(v) for v in range(g.n)]
    edge_count = g.edge_count
    betti_r = edge_count - g.n + 1
    pts = [(0, _det_point(g, degrees, 0))]
    for x in range(1, g.n + 1):
        pts.append((x, _det_point(g, degrees, x)))
        pts.append((-x, _det_point(g, degrees, -x)))
    coeffs = _interpolate_integer_poly(pts)
    if coeffs[0] != 1:
        raise ArithmeticError("determinant polynomial must have constant term 1")
    return ZetaReciprocal(betti_r=betti_r, det_coeffs=tuple(coeffs), n=g.n)


def det_series_regular(g: Graph, cert: RegularityCertificate, order: int) -> TruncatedSeries:
    """det(I - uA + q u^2 I) as an exact series, via power-sum traces.

    log det(I - X) = -sum_j Tr(X^j)/j with X = uA - qu^2 I; Tr(X^j)
    expands over adjacency power traces.  This route never builds the
    degree-2n polynomial, so it scales to n in the hundreds where the
    interpolation route does not.
    """
    q = cert.q
    w = adjacency_power_traces(g, order)
    log_coeffs = [Fraction(0)] * (order + 1)
    for j in range(1, order + 1):
        for i in range(j + 1):
            k = j + i
            if k > order:
                break
            term = comb(j, i) * (-q) ** i * w[j - i]
            log_coeffs[k] -= Fraction(term, j)
    return TruncatedSeries.from_coeffs(log_coeffs, order).exp()


def reciprocal_series_regular(g: Graph, cert: RegularityCertificate, order: int) -> TruncatedSeries:
    """Z(u)^{-1} as an exact series for a regular graph, power-sum route."""
    betti_r = g.edge_count - g.n + 1
    return binomial_one_minus_u2(betti_r - 1, order) * det_series_regular(g, cert, order)


def spectrum_factored_poly(sd) -> list:
    """prod_lambda (1 - lambda u + q u^2)^{mult} expanded; exact if the spectrum is integral."""
    exact = all(float(c.value).is_integer() for c in sd.clusters)
    coeffs = [1 if exact else 1.0]
    for cl in sd.clusters:
        lam = int(cl.value) if exact else cl.value
        factor = [1, -lam, sd.q]
        for _ in range(cl.mult):
            new = [0] * (len(coeffs) + 2)
            for i, a in enumerate(coeffs):
                for j, b in enumerate(factor):
                    new[i + j] += a * b
            coeffs = new
    return coeffs


def zeta_series_from_counts(counts: list[int], order: int | None = None) -> TruncatedSeries:
    """Z(u) = exp(sum N_m u^m / m) from exact reduced-cycle counts N_1..N_M."""
    if order is None:
        order = len(counts)
    log_coeffs = [Fraction(0)]
    for m, nm in enumerate(counts[:order], start=1):
        log_coeffs.append(Fraction(nm, m))
    return TruncatedSeries.from_coeffs(log_coeffs, order).exp()


def verify_ihara_bass(g: Graph, order: int = 10) -> Fraction:
    """Max |coefficient difference| between the two exact zeta routes.

    Counts come from the matrix recurrence when the graph is regular and
    from the brute-force cycle oracle otherwise; the other side is the
    determinant form of the reciprocal (power-sum series for regular
    graphs, point interpolation otherwise).  Exact zero expected.
    """
    try:
        cert = certify_regular(g)
    except NotRegular:
        cert = None
    if cert is not None:
        counts = n_reduced_range(g, cert, order, method="full")
        recip = reciprocal_series_regular(g, cert, order)
        from_bass = recip.inverse()
    else:
        counts = count_reduced_cycles_all(g, order)
        from_bass = ihara_bass_reciprocal(g).zeta_series(order)
    from_counts = zeta_series_from_counts(counts, order)
    return max(abs(a - b) for a, b in zip(from_counts.coeffs, from_bass.coeffs))


# ---------------------------------------------------------------------------
# Eisenstein and cusp coefficients for LPS graphs


def eisenstein_C(p: int, q: int, m: int) -> Fraction:
    """Eisenstein-series Fourier coefficient C(p^m), exact.

    ((1 + (p/q)^m)/2) * (4/(q(q^2-1))) * ((p^{m+1}-1)/(p-1)).  The
    formula extends consistently to m = 0, where it produces 4/(q(q^2-1)),
    the value forced by the constant term of phi.
    """
    if not is_prime(p) or not is_prime(q) or p == q:
        raise InvalidPrime("eisenstein_C needs distinct primes p, q")
    if m < 0:
        raise ValueError("m must be nonnegative")
    leg = legendre_symbol(p, q)
    first = Fraction(1 + leg**m, 2) if leg != 1 else Fraction(1)
    if leg == -1 and m % 2 == 1:
        return Fraction(0)
    geom = Fraction(p ** (m + 1) - 1, p - 1)
    return first * Fraction(4, q * (q * q - 1)) * geom


def cusp_coefficient(g_lps: Graph, params: LpsParams, m: int, *, method: str = "auto") -> Fraction:
    """Cusp-form Fourier coefficient a(p^m) = (2/n) Tr(T~_m) - C(p^m), exact."""
    cert = certify_regular(g_lps)
    tt = t_tilde_traces(g_lps, cert, m, method=method)
    return Fraction(2 * tt[m], g_lps.n) - eisenstein_C(params.p, params.q, m)


def cusp_coefficients_range(
    g_lps: Graph, params: LpsParams, m_max: int, *, method: str = "auto"
) -> list[Fraction]:
    """[a(p^0), ..., a(p^{m_max})] in one trace sweep."""
    cert = certify_regular(g_lps)
    tts = t_tilde_traces(g_lps, cert, m_max, method=method)
    return [
        Fraction(2 * tts[m], g_lps.n) - eisenstein_C(params.p, params.q, m)
        for m in range(m_max + 1)
    ]


def _tempered_count(sd) -> int:
    """l = number of eigenvalues with |lambda| < 2 sqrt(q), with multiplicity."""
    return sum(c.mult for c in sd.principal())


def phi_series(
    g_lps: Graph, params: LpsParams, order: int, sd=None
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """The generating function phi(t) = sum a(p^m)/(2 p^{m/2}) t^m, two ways.

    Returns (spectral, closed_form) truncated series.  The spectral side
    sums normalized cusp coefficients.  The closed form is

        phi(t) = (1/(n(1-t^2))) * { l + (t/sqrt p)(Z'/Z)(t/sqrt p)
                                    - (p-1) n t^2/(p - t^2) + t*F(t) }

    with F(t) = -2pt/(1-pt^2) - 2p^{-1}t/(1-p^{-1}t^2) in the bipartite
    case and F(t) = -sqrt(p)/(1-sqrt(p)t) - p^{-1/2}/(1-p^{-1/2}t)
    otherwise, l the number of tempered eigenvalues with multiplicity,
    and Z'/Z the zeta log-derivative series.  Both sides are computed in
    Q(sqrt p) exactly; coefficients are returned as exact rationals when
    the irrational parts vanish (always, for bipartite X^{p,q}) and as
    floats otherwise.
    """
    p = params.p
    n = g_lps.n
    cert = certify_regular(g_lps)
    if sd is None:
        from .spectral import eigendecompose

        sd = eigendecompose(g_lps, cert)
    # spectral side: a(p^m) / (2 p^{m/2})
    amounts = cusp_coefficients_range(g_lps, params, order)
    spectral = [
        SqrtExt.of(p, amounts[m]) / (2 * half_power(p, m)) for m in range(order + 1)
    ]
    # closed form: assemble the brace series over Q(sqrt p)
    zero = SqrtExt.of(p, 0)
    braces = [zero for _ in range(order + 1)]
    braces[0] = braces[0] + _tempered_count(sd)
    # (t/sqrt p)(Z'/Z)(t/sqrt p): coefficient of t^m is N_m p^{-m/2}
    recip = reciprocal_series_regular(g_lps, cert, order)
    logder = (-recip.derivative()) * recip.inverse()  # sum N_m u^{m-1}
    for m in range(1, order + 1):
        nm = logder.coeffs[m - 1]
        if nm:
            braces[m] = braces[m] + SqrtExt.of(p, nm) * half_power(p, -m)
    # -(p-1) n t^2/(p - t^2) = -(p-1) n sum_{j>=1} t^{2j} / p^j
    for j in range(1, order // 2 + 1):
        braces[2 * j] = braces[2 * j] - Fraction((p - 1) * n, p**j)
    # + t F(t)
    if cert.bipartite:
        # tF = -2 sum_{j>=0} (p^{j+1} + p^{-(j+1)}) t^{2j+2}
        for j in range(0, (order - 2) // 2 + 1):
            braces[2 * j + 2] = braces[2 * j + 2] - 2 * (
                Fraction(p ** (j + 1)) + Fraction(1, p ** (j + 1))
            )
    else:
        # tF = -sum_{k>=1} (p^{k/2} + p^{-k/2}) t^k
        for k in range(1, order + 1):
            braces[k] = braces[k] - (half_power(p, k) + half_power(p, -k))
    # divide by n(1 - t^2): phi_m = (1/n) sum_j braces[m - 2j]
    closed = []
    for m in range(order + 1):
        acc = zero
        j = m
        while j >= 0:
            acc = acc + braces[j]
            j -= 2
        closed.append(acc / n)
    return _sqrtext_series(spectral, order), _sqrtext_series(closed, order)


def _sqrtext_series(values: list[SqrtExt], order: int) -> TruncatedSeries:
    if all(v.is_rational() for v in values):
        return TruncatedSeries.from_coeffs([v.rational_part() for v in values], order)
    return TruncatedSeries.from_coeffs([float(v) for v in values], order)


def zeta_log_derivative_point(sd, betti_r: int, u: float) -> float:
    """(Z'/Z)(u) from the factored reciprocal, evaluated at a real point.

    Z'/Z = 2u(r-1)/(1-u^2) + sum_lambda mult * (lambda - 2qu)/(1 - lambda u + q u^2).
    """
    q = sd.q
    total = 2.0 * u * (betti_r - 1) / (1.0 - u * u)
    for cl in sd.clusters:
        lam = cl.value
        total += cl.mult * (lam - 2.0 * q * u) / (1.0 - lam * u + q * u * u)
    return total


def phi_closed_point(g_lps: Graph, params: LpsParams, sd, t: float) -> float:
    """Evaluate the closed form of phi at a real point inside the unit disk."""
    p = params.p
    n = g_lps.n
    cert = certify_regular(g_lps)
    betti_r = g_lps.edge_count - g_lps.n + 1
    rp = p**0.5
    u = t / rp
    braces = _tempered_count(sd)
    braces += u * zeta_log_derivative_point(sd, betti_r, u)
    braces -= (p - 1) * n * t * t / (p - t * t)
    if cert.bipartite:
        f = -2.0 * p * t / (1.0 - p * t * t) - (2.0 / p) * t / (1.0 - t * t / p)
    else:
        f = -rp / (1.0 - rp * t) - (1.0 / rp) / (1.0 - t / rp)
    braces += t * f
    return braces / (n * (1.0 - t * t))
