"""Brute-force enumeration oracles.

These routines define ground truth for small instances by explicit
depth-first search over arcs.  They deliberately share no code with the
matrix recurrences they are used to validate: correctness here rests on
the search being a direct transcription of the definitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import DepthExceeded
from .graphs import Graph

DEFAULT_DEPTH_GUARD = 14
DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class ArcList:
    """Oriented arcs of an undirected multigraph.

    arcs[a] = (origin, terminus); inverse[a] is the reversed arc.
    Parallel edges yield distinct arc pairs and a loop yields two
    mutually inverse arcs, so len(arcs) = 2 * edge_count always.
    """

    arcs: tuple[tuple[int, int], ...]
    inverse: tuple[int, ...]
    out: tuple[tuple[int, ...], ...]

    @classmethod
    def from_graph(cls, g: Graph) -> "ArcList":
        arcs: list[tuple[int, int]] = []
        inverse: list[int] = []
        for i in range(g.n):
            for j in range(i, g.n):
                if i == j:
                    count = g.adj[i][i] // 2
                else:
                    count = g.adj[i][j]
                for _ in range(count):
                    a = len(arcs)
                    arcs.append((i, j))
                    arcs.append((j, i))
                    inverse.extend([a + 1, a])
        out: list[list[int]] = [[] for _ in range(g.n)]
        for a, (o, _) in enumerate(arcs):
            out[o].append(a)
        return cls(tuple(arcs), tuple(inverse), tuple(tuple(o) for o in out))


def _check_cost(g: Graph, m: int, depth_guard: int, budget: int) -> None:
    if m > depth_guard:
        raise DepthExceeded(f"depth {m} exceeds guard {depth_guard}")
    deg = max(g.degree(v) for v in range(g.n))
    est = g.n * deg * max(deg - 1, 1) ** max(m - 1, 0)
    if est > budget:
        raise DepthExceeded(f"estimated {est} steps exceeds budget {budget}")


def count_reduced_cycles_bf(
    g: Graph, m: int, *, depth_guard: int = DEFAULT_DEPTH_GUARD, budget: int = DEFAULT_BUDGET
) -> int:
    """Count reduced (backtrackless and tailless) closed paths of length m.

    A path is an arc sequence (e_1..e_m) with t(e_i) = o(e_{i+1}),
    closed means o(e_1) = t(e_m), non-backtracking means
    e_{i+1} != inverse(e_i), and tailless additionally requires
    e_1 != inverse(e_m).  Every starting point and orientation is
    counted separately.
    """
    if m < 1:
        raise ValueError("cycle length must be at least 1")
    _check_cost(g, m, depth_guard, budget)
    al = ArcList.from_graph(g)
    total = 0

    def walk(first: int, cur: int, banned: int, depth: int) -> int:
        here = al.arcs[cur][1]
        if depth == m:
            if here == al.arcs[first][0] and cur != al.inverse[first]:
                return 1
            return 0
        count = 0
        for nxt in al.out[here]:
            if nxt != banned:
                count += walk(first, nxt, al.inverse[nxt], depth + 1)
        return count

    for first in range(len(al.arcs)):
        total += walk(first, first, al.inverse[first], 1)
    return total


def count_reduced_cycles_all(
    g: Graph, m_max: int, *, depth_guard: int = DEFAULT_DEPTH_GUARD, budget: int = DEFAULT_BUDGET
) -> list[int]:
    """Counts from count_reduced_cycles_bf for every m in 1..m_max, one sweep."""
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    _check_cost(g, m_max, depth_guard, budget)
    al = ArcList.from_graph(g)
    totals = [0] * (m_max + 1)

    def walk(first: int, cur: int, depth: int) -> None:
        here = al.arcs[cur][1]
        if here == al.arcs[first][0] and cur != al.inverse[first]:
            totals[depth] += 1
        if depth == m_max:
            return
        banned = al.inverse[cur]
        for nxt in al.out[here]:
            if nxt != banned:
                walk(first, nxt, depth + 1)

    for first in range(len(al.arcs)):
        walk(first, first, 1)
    return totals[1:]


def count_reduced_paths_bf(
    g: Graph,
    i: int,
    j: int,
    m: int,
    *,
    depth_guard: int = DEFAULT_DEPTH_GUARD,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Count non-backtracking arc sequences of length m from vertex i to j.

    No tail condition applies; tails are a closed-walk concept.  m = 0
    counts the empty path, so the result is the identity matrix entry.
    """
    if m < 0:
        raise ValueError("path length must be nonnegative")
    if m == 0:
        return 1 if i == j else 0
    _check_cost(g, m, depth_guard, budget)
    al = ArcList.from_graph(g)

    def walk(cur: int, depth: int) -> int:
        here = al.arcs[cur][1]
        if depth == m:
            return 1 if here == j else 0
        banned = al.inverse[cur]
        count = 0
        for nxt in al.out[here]:
            if nxt != banned:
                count += walk(nxt, depth + 1)
        return count

    return sum(walk(first, 1) for first in al.out[i])


def count_reduced_paths_all(
    g: Graph, m_max: int, *, depth_guard: int = DEFAULT_DEPTH_GUARD, budget: int = DEFAULT_BUDGET
) -> list[list[list[int]]]:
    """All-pairs reduced path counts for m in 0..m_max.

    Returns a list of n x n integer matrices; entry [m][i][j] matches
    count_reduced_paths_bf(g, i, j, m).
    """
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    _check_cost(g, m_max, depth_guard, budget)
    al = ArcList.from_graph(g)
    mats = [[[0] * g.n for _ in range(g.n)] for _ in range(m_max + 1)]
    for v in range(g.n):
        mats[0][v][v] = 1

    def walk(src: int, cur: int, depth: int) -> None:
        here = al.arcs[cur][1]
        mats[depth][src][here] += 1
        if depth == m_max:
            return
        banned = al.inverse[cur]
        for nxt in al.out[here]:
            if nxt != banned:
                walk(src, nxt, depth + 1)

    for src in range(g.n):
        for first in al.out[src]:
            walk(src, first, 1)
    return mats


def count_nbt_closed_bf(
    g: Graph,
    v: int,
    m: int,
    *,
    depth_guard: int = DEFAULT_DEPTH_GUARD,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Count non-backtracking closed arc sequences at v, tails allowed.

    Only consecutive backtracking is forbidden; e_1 = inverse(e_m) is
    permitted, so this equals the vv entry of the m-th adjacency
    recurrence matrix rather than the reduced-cycle count.
    """
    if m < 0:
        raise ValueError("walk length must be nonnegative")
    if m == 0:
        return 1
    return count_reduced_paths_bf(g, v, v, m, depth_guard=depth_guard, budget=budget)


def count_tailed_closed_bf(
    g: Graph,
    v: int,
    m: int,
    *,
    depth_guard: int = DEFAULT_DEPTH_GUARD,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Count non-backtracking closed sequences at v whose closure has a tail.

    These are the walks counted by count_nbt_closed_bf but excluded from
    the reduced-cycle count: closed, non-backtracking, and
    e_1 = inverse(e_m).
    """
    if m < 1:
        raise ValueError("walk length must be at least 1")
    _check_cost(g, m, depth_guard, budget)
    al = ArcList.from_graph(g)

    def walk(first: int, cur: int, depth: int) -> int:
        here = al.arcs[cur][1]
        if depth == m:
            return 1 if (here == al.arcs[first][0] and cur == al.inverse[first]) else 0
        banned = al.inverse[cur]
        return sum(walk(first, nxt, depth + 1) for nxt in al.out[here] if nxt != banned)

    return sum(walk(first, first, 1) for first in al.out[v])


def lattice_count(qprime: int, target: int) -> int:
    """Count integer solutions of x1^2 + 4q^2(x2^2 + x3^2 + x4^2) = target.

    Exhaustive search over the three scaled coordinates with the tight
    bound |x_i| <= sqrt(target)/(2q); the residual is tested for being a
    perfect square.  Signs count separately and zero coordinates are not
    doubled.
    """
    if target < 0:
        raise ValueError("target must be nonnegative")
    if qprime < 1:
        raise ValueError("qprime must be positive")
    s = 4 * qprime * qprime
    bound = isqrt(target // s) if target >= s else 0
    total = 0
    for x2 in range(-bound, bound + 1):
        r2 = target - s * x2 * x2
        if r2 < 0:
            continue
        b3 = isqrt(r2 // s)
        for x3 in range(-b3, b3 + 1):
            r3 = r2 - s * x3 * x3
            if r3 < 0:
                continue
            b4 = isqrt(r3 // s)
            for x4 in range(-b4, b4 + 1):
                r4 = r3 - s * x4 * x4
                if r4 < 0:
                    continue
                x1 = isqrt(r4)
                if x1 * x1 == r4:
                    total += 1 if x1 == 0 else 2
    return total
