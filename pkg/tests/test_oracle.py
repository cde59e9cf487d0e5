"""Brute-force enumeration oracle: hand anchors and internal consistency."""

import pytest

from iharalab.errors import DepthExceeded
from iharalab.graphs import build_graph
from iharalab.oracle import (
    count_nbt_closed_bf,
    count_reduced_cycles_all,
    count_reduced_cycles_bf,
    count_reduced_paths_all,
    count_reduced_paths_bf,
    count_tailed_closed_bf,
    lattice_count,
)


def test_triangle_hand_counts(corpus):
    g, _ = corpus["K3"]
    # the only reduced closed paths go all the way around: 3 starts x 2 directions
    assert count_reduced_cycles_bf(g, 3) == 6
    assert count_reduced_cycles_bf(g, 1) == 0
    assert count_reduced_cycles_bf(g, 2) == 0
    assert count_reduced_cycles_bf(g, 4) == 0
    assert count_reduced_cycles_bf(g, 6) == 6  # twice around


def test_k4_anchor(corpus):
    g, _ = corpus["K4"]
    # 4 choose 3 triangles, 3 starts, 2 orientations
    assert count_reduced_cycles_bf(g, 3) == 24


def test_petersen_anchors(corpus):
    g, _ = corpus["PETERSEN"]
    assert count_reduced_cycles_bf(g, 5) == 120
    assert count_reduced_cycles_bf(g, 6) == 120
    assert count_reduced_cycles_bf(g, 3) == 0
    assert count_reduced_cycles_bf(g, 4) == 0


def test_all_sweep_matches_single_calls(corpus):
    for name in ("K3", "K4", "K33"):
        g, _ = corpus[name]
        sweep = count_reduced_cycles_all(g, 7)
        singles = [count_reduced_cycles_bf(g, m) for m in range(1, 8)]
        assert sweep == singles, name


def test_paths_all_matches_single_calls(corpus):
    g, _ = corpus["K4"]
    mats = count_reduced_paths_all(g, 5)
    for m in (0, 1, 2, 5):
        for i in range(g.n):
            for j in range(g.n):
                assert mats[m][i][j] == count_reduced_paths_bf(g, i, j, m)


def test_paths_m0_is_identity(corpus):
    g, _ = corpus["PETERSEN"]
    assert count_reduced_paths_bf(g, 3, 3, 0) == 1
    assert count_reduced_paths_bf(g, 3, 4, 0) == 0


def test_paths_m1_is_adjacency(corpus):
    g, _ = corpus["K33"]
    for i in range(g.n):
        for j in range(g.n):
            assert count_reduced_paths_bf(g, i, j, 1) == g.adj[i][j]


def test_closed_decomposition(corpus):
    """Non-backtracking closed walks split into tailless and tailed ones."""
    for name in ("K4", "PETERSEN", "CUBE"):
        g, _ = corpus[name]
        mats = count_reduced_paths_all(g, 8)
        for m in range(2, 9):
            for v in range(g.n):
                closed = count_nbt_closed_bf(g, v, m)
                tailed = count_tailed_closed_bf(g, v, m)
                assert closed == mats[m][v][v]
                assert tailed <= closed


def test_tailed_counts_on_triangle(corpus):
    g, _ = corpus["K3"]
    # length 2: out and back is backtracking, not allowed; no tailed walks either
    assert count_nbt_closed_bf(g, 0, 2) == 0
    assert count_tailed_closed_bf(g, 0, 2) == 0


def test_multigraph_cycles():
    # two vertices with a double edge: go over one strand, back the other
    g = build_graph(2, [(0, 1, 2)])
    assert count_reduced_cycles_bf(g, 2) == 4  # 2 arc choices x 2 starts
    assert count_reduced_cycles_bf(g, 1) == 0


def test_loop_cycles():
    # one vertex with two loops is 4-regular; each loop arc is a 1-cycle
    g = build_graph(1, [(0, 0, 2)])
    assert count_reduced_cycles_bf(g, 1) == 4


def test_depth_guard():
    g = build_graph(2, [(0, 1, 2)])
    with pytest.raises(DepthExceeded):
        count_reduced_cycles_bf(g, 15)


def test_budget_guard(corpus):
    g, _ = corpus["PETERSEN"]
    with pytest.raises(DepthExceeded):
        count_reduced_cycles_bf(g, 10, budget=100)


def test_lattice_count_small_targets():
    # x^2 + 4*25*(y^2 + z^2 + w^2) = target with qprime = 5
    assert lattice_count(5, 1) == 2  # x = +-1
    assert lattice_count(5, 13) == 0
    assert lattice_count(5, 169) == 2  # x = +-13


def test_lattice_count_x_zero_counted_once():
    # target = 100: solutions x=+-10 (2) plus x=0, one of y,z,w = +-1 (6): total 8
    assert lattice_count(5, 100) == 8
