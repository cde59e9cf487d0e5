"""Matrix recurrences against the enumeration oracle and each other."""

import math

import numpy as np
import pytest

from iharalab.nbt import (
    a_matrix,
    a_matrix_range,
    adjacency_power_traces,
    cheb_t_real,
    cheb_u_real,
    chebyshev_b_range,
    f_values,
    m_matrix,
    n_reduced,
    n_reduced_range,
    principal_am,
    principal_am_recurrence,
    s_matrix,
    t_tilde_matrix,
    t_tilde_traces,
    trace_identity_rhs,
)
from iharalab.oracle import count_reduced_cycles_all, count_reduced_paths_all


M_ORACLE = 8


def test_a_matrix_counts_paths(corpus):
    for name, (g, cert) in corpus.items():
        mats = count_reduced_paths_all(g, M_ORACLE)
        recs = a_matrix_range(g, cert, M_ORACLE)
        assert recs == mats, name


def test_m_matrix_trace_is_cycle_count(corpus):
    for name, (g, cert) in corpus.items():
        counts = count_reduced_cycles_all(g, M_ORACLE)
        for m in range(1, M_ORACLE + 1):
            mm = m_matrix(g, cert, m)
            assert sum(mm[i][i] for i in range(g.n)) == counts[m - 1], (name, m)


def test_n_reduced_matches_oracle(corpus):
    for name, (g, cert) in corpus.items():
        counts = count_reduced_cycles_all(g, M_ORACLE)
        assert n_reduced_range(g, cert, M_ORACLE, method="full") == counts, name


def test_row_method_matches_full(corpus):
    # every graph in the corpus is vertex-transitive
    for name, (g, cert) in corpus.items():
        full = n_reduced_range(g, cert, M_ORACLE, method="full")
        row = n_reduced_range(g, cert, M_ORACLE, method="row")
        assert full == row, name


def test_row_method_on_cayley_graph(x135):
    g, _, cert, _ = x135
    assert n_reduced_range(g, cert, 12, method="row") == n_reduced_range(
        g, cert, 12, method="full"
    )


def test_n_reduced_single(corpus):
    g, cert = corpus["PETERSEN"]
    assert n_reduced(g, cert, 5) == 120
    assert n_reduced(g, cert, 6) == 120
    assert n_reduced(g, cert, 7) == 0
    assert n_reduced(g, cert, 8) == 240


def test_t_tilde_is_parity_sum_of_a(corpus):
    for name, (g, cert) in corpus.items():
        mats = a_matrix_range(g, cert, 7)
        for m in range(8):
            want = mats[m]
            j = m - 2
            while j >= 0:
                want = [[want[r][c] + mats[j][r][c] for c in range(g.n)] for r in range(g.n)]
                j -= 2
            assert t_tilde_matrix(g, cert, m) == want, (name, m)


def test_t_tilde_traces_match_matrices(corpus):
    g, cert = corpus["CUBE"]
    traces = t_tilde_traces(g, cert, 9)
    for m in range(10):
        tm = t_tilde_matrix(g, cert, m)
        assert traces[m] == sum(tm[i][i] for i in range(g.n))


def test_f_values_are_diagonal_entries(corpus):
    for name, (g, cert) in corpus.items():
        vals = f_values(g, cert, M_ORACLE, v=0)
        mats = a_matrix_range(g, cert, M_ORACLE)
        assert vals == [mats[m][0][0] for m in range(M_ORACLE + 1)], name


def test_chebyshev_b_identity_small(corpus):
    """M_m = B_m + e_m (q-1) I exactly, B_m the integer Chebyshev matrices."""
    for name, (g, cert) in corpus.items():
        q = cert.q
        bs = chebyshev_b_range(g, cert, 30)
        for m in range(1, 31):
            mm = m_matrix(g, cert, m)
            shift = (q - 1) if m % 2 == 0 else 0
            for i in range(g.n):
                for j in range(g.n):
                    want = bs[m][i][j] + (shift if i == j else 0)
                    assert mm[i][j] == want, (name, m)


def test_chebyshev_b_identity_x135(x135):
    g, _, cert, _ = x135
    q = cert.q
    bs = chebyshev_b_range(g, cert, 12)
    for m in (1, 2, 3, 7, 12):
        mm = m_matrix(g, cert, m)
        shift = (q - 1) if m % 2 == 0 else 0
        for i in range(g.n):
            row_m, row_b = mm[i], bs[m][i]
            for j in range(g.n):
                assert row_m[j] == row_b[j] + (shift if i == j else 0), m


def test_b_matrices_match_float_chebyshev(corpus):
    """B_m = 2 q^{m/2} T_m(A / 2 sqrt q) numerically on small graphs."""
    for name, (g, cert) in corpus.items():
        q = cert.q
        a = g.as_numpy().astype(float)
        x = a / (2.0 * math.sqrt(q))
        t_prev = np.eye(g.n)
        t_cur = x.copy()
        bs = chebyshev_b_range(g, cert, 10)
        for m in range(1, 11):
            want = 2.0 * q ** (m / 2.0) * t_cur
            got = np.array(bs[m], dtype=float)
            assert np.allclose(got, want, atol=1e-8), (name, m)
            t_prev, t_cur = t_cur, 2.0 * x @ t_cur - t_prev


def test_adjacency_power_traces_vs_numpy(corpus):
    for name, (g, _) in corpus.items():
        a = g.as_numpy().astype(np.int64)
        w = adjacency_power_traces(g, 8)
        pw = np.eye(g.n, dtype=np.int64)
        for k in range(9):
            assert w[k] == int(np.trace(pw)), (name, k)
            pw = pw @ a


def test_cheb_real_branches():
    assert abs(cheb_t_real(7, 0.3) - math.cos(7 * math.acos(0.3))) < 1e-12
    assert abs(cheb_t_real(6, 1.5) - math.cosh(6 * math.acosh(1.5))) < 1e-6
    # odd parity at x < -1
    assert abs(cheb_t_real(5, -1.5) + math.cosh(5 * math.acosh(1.5))) < 1e-6
    u = math.sin(4 * 1.1) / math.sin(1.1)
    assert abs(cheb_u_real(3, math.cos(1.1)) - u) < 1e-12


def test_principal_am_spectral_vs_recurrence(corpus, spectra):
    """Two routes to the principal part: projector sums vs. weight-corrected B_m."""
    for name in ("K4", "K33", "PETERSEN", "CUBE"):
        g, cert = corpus[name]
        sd = spectra[name]
        for m in (1, 2, 3, 8, 15):
            spec = principal_am(sd, m)
            rec = principal_am_recurrence(g, cert, sd, m)
            assert np.allclose(spec, rec, atol=1e-9), (name, m)


def test_principal_am_entry_bounds(spectra):
    for name, sd in spectra.items():
        for m in range(1, 60):
            am = principal_am(sd, m)
            assert np.max(np.abs(am)) <= 1.0 + 1e-9, (name, m)


def test_s_matrix_entry_bounds(spectra):
    sd = spectra["PETERSEN"]
    # rows of U_m(cos)/U-type sums: |s_m entries| <= 1/sin(theta) per cluster sum
    bound = sum(cl.mult for cl in sd.principal())  # very loose sanity bound
    for m in range(1, 20):
        sm = s_matrix(sd, m)
        assert np.max(np.abs(sm)) <= bound


def test_trace_identity(corpus, spectra):
    """N_m = 2 q^{m/2} sum m_lambda T_m(lambda / 2 sqrt q) + n e_m (q - 1)."""
    for name, (g, cert) in corpus.items():
        counts = n_reduced_range(g, cert, 20, method="full")
        sd = spectra[name]
        for m in range(1, 21):
            rhs = trace_identity_rhs(sd, m)
            assert abs(rhs - counts[m - 1]) < 1e-6 * max(1, abs(counts[m - 1])), (name, m)


def test_m_matrix_rejects_zero(corpus):
    g, cert = corpus["K4"]
    with pytest.raises(ValueError):
        m_matrix(g, cert, 0)


def test_a_matrix_low_orders(corpus):
    g, cert = corpus["PETERSEN"]
    q = cert.q
    a0 = a_matrix(g, cert, 0)
    assert all(a0[i][i] == 1 for i in range(g.n))
    a1 = a_matrix(g, cert, 1)
    assert a1 == [list(row) for row in g.adj]
    a2 = a_matrix(g, cert, 2)
    adj = g.as_numpy().astype(int)
    want = adj @ adj - (q + 1) * np.eye(g.n, dtype=int)
    assert (np.array(a2) == want).all()
