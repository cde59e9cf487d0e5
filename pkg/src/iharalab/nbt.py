"""Non-backtracking walk matrices for regular graphs.

Exact integer routes compute the recurrence family A_m (reduced path
counts), the reduced-cycle matrices M_m, their traces N_m, and the
theta-series matrices T~_m.  Spectral float routes compute the same
objects from an eigendecomposition, plus the bounded matrices a_m and
s_m supported on the principal part of the spectrum.  The two routes
are kept deliberately independent so each can test the other.

Conventions for a (q+1)-regular graph:
    A_0 = I, A_1 = A, A_2 = A^2 - (q+1)I, A_m = A_{m-1}A - qA_{m-2}.
    M_m = A_m - (q-1) * sum_{k=1}^{floor((m-1)/2)} A_{m-2k}.
    N_m = Tr(M_m).
    T~_m = sum_{0 <= r <= m/2} A_{m-2r}.
    B_m = 2q^{m/2} T_m(A/(2 sqrt q)) obeys the integer recurrence
    B_0 = 2I, B_1 = A, B_m = B_{m-1}A - qB_{m-2}, and M_m = B_m +
    e_m(q-1)I for m >= 1.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import NotRamanujan
from .graphs import Graph, RegularityCertificate

IntMatrix = list[list[int]]


# ---------------------------------------------------------------------------
# exact integer kernels


def _adjacency_rows(g: Graph) -> IntMatrix:
    return [list(row) for row in g.adj]


def _identity_rows(n: int, scale: int = 1) -> IntMatrix:
    return [[scale if i == j else 0 for j in range(n)] for i in range(n)]


def _columns(g: Graph):
    """Column access lists for right-multiplication by the adjacency matrix.

    Returns (cols, simple): cols[j] lists the w with adj[w][j] != 0, as
    bare indices when every multiplicity is 1 (simple flag on), else as
    (w, multiplicity) pairs.
    """
    simple = all(c == 1 for row in g.adj for c in row if c)
    if simple:
        cols = [tuple(w for w in range(g.n) if g.adj[w][j]) for j in range(g.n)]
    else:
        cols = [tuple((w, g.adj[w][j]) for w in range(g.n) if g.adj[w][j]) for j in range(g.n)]
    return cols, simple


def _mul_adj(rows: IntMatrix, cols, simple: bool) -> IntMatrix:
    out = []
    if simple:
        for row in rows:
            out.append([sum(row[w] for w in col) for col in cols])
    else:
        for row in rows:
            out.append([sum(row[w] * c for w, c in col) for col in cols])
    return out


def _row_mul_adj(row: list[int], cols, simple: bool) -> list[int]:
    if simple:
        return [sum(row[w] for w in col) for col in cols]
    return [sum(row[w] * c for w, c in col) for col in cols]


def _mat_axpy(target: IntMatrix, source: IntMatrix, scale: int) -> None:
    for trow, srow in zip(target, source):
        for j, s in enumerate(srow):
            trow[j] += scale * s


def _mat_combine(a: IntMatrix, b: IntMatrix, sb: int) -> IntMatrix:
    return [[x + sb * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


class ExactMatrixSeq:
    """Forward sweep of the A_m recurrence with O(n^2) memory.

    Holds (A_{m-1}, A_m) plus running parity-split sums of all earlier
    A_j, which is exactly what M_m and T~_m extraction needs.  advance()
    moves from index m to m+1.
    """

    def __init__(self, g: Graph, cert: RegularityCertificate):
        self.g = g
        self.q = cert.q
        self.n = g.n
        self._cols, self._simple = _columns(g)
        self.m = 0
        self.curr: IntMatrix = _identity_rows(g.n)
        self.prev: IntMatrix | None = None
        # parity sums of A_j for j < m, including j = 0
        self._even_sum: IntMatrix = [[0] * g.n for _ in range(g.n)]
        self._odd_sum: IntMatrix = [[0] * g.n for _ in range(g.n)]

    def advance(self) -> None:
        target = self._even_sum if self.m % 2 == 0 else self._odd_sum
        _mat_axpy(target, self.curr, 1)
        nxt = _mul_adj(self.curr, self._cols, self._simple)
        if self.m == 0:
            pass  # A_1 = I * A = A
        elif self.m == 1:
            _mat_axpy(nxt, _identity_rows(self.n, self.q + 1), -1)
        else:
            _mat_axpy(nxt, self.prev, -self.q)
        self.prev = self.curr
        self.curr = nxt
        self.m += 1

    def run_to(self, m: int) -> None:
        while self.m < m:
            self.advance()

    def a_current(self) -> IntMatrix:
        return self.curr

    def m_current(self) -> IntMatrix:
        """M_m for the current index; exact."""
        if self.m == 0:
            return _identity_rows(self.n)
        corr = self._even_sum if self.m % 2 == 0 else self._odd_sum
        out = _mat_combine(self.curr, corr, -(self.q - 1))
        if self.m % 2 == 0:
            # the correction sum stops at index 2, but _even_sum holds A_0
            for i in range(self.n):
                out[i][i] += self.q - 1
        return out

    def t_tilde_current(self) -> IntMatrix:
        """T~_m for the current index; exact."""
        corr = self._even_sum if self.m % 2 == 0 else self._odd_sum
        return _mat_combine(self.curr, corr, 1)

    def trace(self) -> int:
        return sum(self.curr[i][i] for i in range(self.n))


def a_matrix(g: Graph, cert: RegularityCertificate, m: int) -> IntMatrix:
    """Exact A_m; entry (i, j) counts reduced paths of length m from i to j."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    seq = ExactMatrixSeq(g, cert)
    seq.run_to(m)
    return seq.a_current()


def a_matrix_range(g: Graph, cert: RegularityCertificate, m_max: int) -> list[IntMatrix]:
    """Exact [A_0, ..., A_{m_max}] in one sweep (materializes all of them)."""
    seq = ExactMatrixSeq(g, cert)
    out = [[row[:] for row in seq.a_current()]]
    for _ in range(m_max):
        seq.advance()
        out.append([row[:] for row in seq.a_current()])
    return out


def m_matrix(g: Graph, cert: RegularityCertificate, m: int) -> IntMatrix:
    """Exact M_m; diagonal entries count reduced cycles at each vertex."""
    if m < 1:
        raise ValueError("m must be at least 1")
    seq = ExactMatrixSeq(g, cert)
    seq.run_to(m)
    return seq.m_current()


def t_tilde_matrix(g: Graph, cert: RegularityCertificate, m: int) -> IntMatrix:
    """Exact T~_m = sum of A_{m-2r} over 0 <= r <= m/2."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    seq = ExactMatrixSeq(g, cert)
    seq.run_to(m)
    return seq.t_tilde_current()


def chebyshev_b_range(g: Graph, cert: RegularityCertificate, m_max: int) -> list[IntMatrix]:
    """Exact [B_0..B_{m_max}] with B_m = 2q^{m/2} T_m(A/(2 sqrt q)).

    Despite the irrational-looking definition these are integer matrices:
    B_0 = 2I, B_1 = A, B_m = B_{m-1}A - qB_{m-2}.  The identity
    M_m = B_m + e_m(q-1)I for m >= 1 links them to the reduced-cycle
    matrices without any floating point.
    """
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    cols, simple = _columns(g)
    q = cert.q
    out = [_identity_rows(g.n, 2)]
    if m_max == 0:
        return out
    out.append(_adjacency_rows(g))
    for _ in range(2, m_max + 1):
        nxt = _mul_adj(out[-1], cols, simple)
        _mat_axpy(nxt, out[-2], -q)
        out.append(nxt)
    return out


# ---------------------------------------------------------------------------
# scalar sweeps: N_m, f_m, trace families


def _reduced_from_closed(vals: Sequence[int], q: int, scale: int = 1) -> list[int]:
    """Turn closed-walk numbers vals[m] into reduced-cycle numbers.

    vals[m] may be Tr(A_m) (scale 1) or f_m on a vertex-transitive graph
    (scale n).  Returns the list for m = 1..len(vals)-1.
    """
    even_sum = 0  # indices 2, 4, ... strictly below m
    odd_sum = 0  # indices 1, 3, ... strictly below m
    out = []
    for m in range(1, len(vals)):
        corr = even_sum if m % 2 == 0 else odd_sum
        out.append(scale * (vals[m] - (q - 1) * corr))
        if m % 2 == 0:
            even_sum += vals[m]
        else:
            odd_sum += vals[m]
    return out


def _theta_from_closed(vals: Sequence[int], scale: int = 1) -> list[int]:
    """Turn closed-walk numbers into Tr(T~_m) for m = 0..len(vals)-1."""
    even_sum = 0  # includes index 0
    odd_sum = 0
    out = []
    for m, v in enumerate(vals):
        corr = even_sum if m % 2 == 0 else odd_sum
        out.append(scale * (v + corr))
        if m % 2 == 0:
            even_sum += v
        else:
            odd_sum += v
    return out


def f_values(g: Graph, cert: RegularityCertificate, m_max: int, v: int = 0) -> list[int]:
    """[f_0..f_{m_max}] with f_m = (A_m)_{vv}, via a single-row recurrence."""
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    cols, simple = _columns(g)
    q = cert.q
    row_prev = [0] * g.n
    row_prev[v] = 1
    out = [1]
    if m_max == 0:
        return out
    row_curr = list(g.adj[v])
    out.append(row_curr[v])
    for m in range(2, m_max + 1):
        nxt = _row_mul_adj(row_curr, cols, simple)
        if m == 2:
            nxt[v] -= q + 1
        else:
            for j in range(g.n):
                nxt[j] -= q * row_prev[j]
        row_prev, row_curr = row_curr, nxt
        out.append(row_curr[v])
    return out


def f_closed(g: Graph, cert: RegularityCertificate, m: int, v: int = 0) -> int:
    """f_m = (A_m)_{vv}: closed non-backtracking walks at v, tails allowed."""
    return f_values(g, cert, m, v)[m]


def _closed_trace_values(g: Graph, cert: RegularityCertificate, m_max: int) -> list[int]:
    """[Tr(A_0)..Tr(A_{m_max})] holding only two matrices at a time."""
    seq = ExactMatrixSeq(g, cert)
    out = [seq.trace()]
    for _ in range(m_max):
        seq.advance()
        out.append(seq.trace())
    return out


def _resolve_method(g: Graph, method: str) -> str:
    if method == "auto":
        return "row" if g.vertex_transitive_hint else "full"
    if method not in ("row", "full"):
        raise ValueError(f"unknown method {method!r}")
    return method


def n_reduced_range(
    g: Graph, cert: RegularityCertificate, m_max: int, *, method: str = "auto"
) -> list[int]:
    """Exact [N_1..N_{m_max}].

    method "full" traces the matrix recurrence; "row" uses a single-row
    sweep and multiplies by n, which is valid on vertex-transitive
    graphs (all constructors that set the hint).  "auto" picks "row"
    exactly when the graph carries the vertex-transitivity hint; the
    test suite pins the two routes against each other.
    """
    method = _resolve_method(g, method)
    if method == "row":
        vals = f_values(g, cert, m_max)
        return _reduced_from_closed(vals, cert.q, scale=g.n)
    vals = _closed_trace_values(g, cert, m_max)
    return _reduced_from_closed(vals, cert.q, scale=1)


def n_reduced(g: Graph, cert: RegularityCertificate, m: int, *, method: str = "full") -> int:
    """Exact N_m = Tr(M_m), the number of reduced cycles of length m."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return n_reduced_range(g, cert, m, method=method)[m - 1]


def t_tilde_traces(
    g: Graph, cert: RegularityCertificate, m_max: int, *, method: str = "auto"
) -> list[int]:
    """Exact [Tr(T~_0)..Tr(T~_{m_max})]."""
    method = _resolve_method(g, method)
    if method == "row":
        vals = f_values(g, cert, m_max)
        return _theta_from_closed(vals, scale=g.n)
    vals = _closed_trace_values(g, cert, m_max)
    return _theta_from_closed(vals, scale=1)


def adjacency_power_traces(g: Graph, m_max: int) -> list[int]:
    """Exact [Tr(A^0)..Tr(A^{m_max})] for the plain adjacency powers."""
    cols, simple = _columns(g)
    cur = _identity_rows(g.n)
    out = [g.n]
    for _ in range(m_max):
        cur = _mul_adj(cur, cols, simple)
        out.append(sum(cur[i][i] for i in range(g.n)))
    return out


# ---------------------------------------------------------------------------
# spectral float routes


def cheb_t_real(m: int, x: float) -> float:
    """T_m(x) for real x, stable on both |x| <= 1 and |x| > 1."""
    if abs(x) <= 1.0:
        return math.cos(m * math.acos(x))
    s = -1.0 if (x < 0 and m % 2) else 1.0
    return s * math.cosh(m * math.acosh(abs(x)))


def cheb_u_real(m: int, x: float) -> float:
    """U_m(x) for real x in (-1, 1), via the sine quotient."""
    th = math.acos(x)
    return math.sin((m + 1) * th) / math.sin(th)


def m_matrix_chebyshev(sd, m: int) -> np.ndarray:
    """Spectral-route M_m = sum_l 2q^{m/2} T_m(l/(2 sqrt q)) P_l + e_m(q-1)I."""
    if m < 1:
        raise ValueError("m must be at least 1")
    q = sd.q
    scale = 2.0 * q ** (m / 2.0)
    out = np.zeros((sd.n, sd.n))
    for cl in sd.clusters:
        out += scale * cheb_t_real(m, cl.value / (2.0 * math.sqrt(q))) * cl.projector
    if m % 2 == 0:
        out += (q - 1) * np.eye(sd.n)
    return out


def principal_am(sd, m: int) -> np.ndarray:
    """a_m = sum over principal eigenvalues of T_m(l/(2 sqrt q)) P_l."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = np.zeros((sd.n, sd.n))
    for cl in sd.principal():
        out += math.cos(m * cl.theta.real) * cl.projector
    return out


def s_matrix(sd, m: int) -> np.ndarray:
    """s_m = sum over principal eigenvalues of U_m(l/(2 sqrt q)) P_l."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = np.zeros((sd.n, sd.n))
    for cl in sd.principal():
        th = cl.theta.real
        out += (math.sin((m + 1) * th) / math.sin(th)) * cl.projector
    return out


def principal_am_recurrence(g: Graph, cert: RegularityCertificate, sd, m: int) -> np.ndarray:
    """a_m recovered from the exact M_m by stripping the singular spectrum.

    Uses closed-form projectors for the trivial eigenvalues q+1 (all-ones
    matrix over n) and -(q+1) (the signed analogue from the bipartition)
    and the computed projectors for any +-2 sqrt(q) clusters.  Requires
    the graph to be Ramanujan apart from those singular values.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    q = sd.q
    root = 2.0 * math.sqrt(q)
    tol = sd.cluster_tol
    exact = np.array(m_matrix(g, cert, m), dtype=float)
    out = exact.copy()
    if m % 2 == 0:
        out -= (q - 1) * np.eye(sd.n)
    for cl in sd.singular():
        lam = cl.value
        if abs(lam - (q + 1)) <= tol:
            proj = np.full((sd.n, sd.n), 1.0 / sd.n)
            weight = float(q**m + 1)
        elif abs(lam + (q + 1)) <= tol:
            if not cert.bipartite:
                raise NotRamanujan("eigenvalue -(q+1) on a non-bipartite graph")
            sign = np.ones(sd.n)
            for v in cert.parts[1]:
                sign[v] = -1.0
            proj = np.outer(sign, sign) / sd.n
            weight = float((-1) ** m * (q**m + 1))
        elif abs(abs(lam) - root) <= tol:
            proj = cl.projector
            weight = (1.0 if lam > 0 else (-1.0) ** m) * 2.0 * q ** (m / 2.0)
        else:
            raise NotRamanujan(
                f"eigenvalue {lam} lies outside [-2 sqrt q, 2 sqrt q] and is not trivial"
            )
        out -= weight * proj
    return out / (2.0 * q ** (m / 2.0))


def trace_identity_rhs(sd, m: int) -> float:
    """Spectral side of N_m: 2q^{m/2} sum_l mult(l) T_m(l/(2 sqrt q)) + n e_m (q-1)."""
    q = sd.q
    total = 0.0
    for cl in sd.clusters:
        total += cl.mult * cheb_t_real(m, cl.value / (2.0 * math.sqrt(q)))
    total *= 2.0 * q ** (m / 2.0)
    if m % 2 == 0:
        total += sd.n * (q - 1)
    return total
