"""Finite undirected multigraphs with a small-integer adjacency matrix.

The central object is an immutable :class:`Graph` storing the adjacency
matrix as nested tuples of Python ints, so exact integer linear algebra
downstream never touches floats.  Loops are allowed and contribute 2 to
the diagonal entry, matching the convention under which row sums equal
vertex degrees.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

import numpy as np

from .errors import (
    DisconnectedGraph,
    EmptyGraph,
    NotRegular,
    ParseError,
    UnknownName,
)


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph on vertices 0..n-1.

    Attributes:
        n: number of vertices.
        adj: adjacency matrix as nested tuples; adj[i][j] is the number
            of edges between i and j, with each loop adding 2 to adj[i][i].
        vertex_transitive_hint: set by constructors that guarantee vertex
            transitivity (named graphs, Cayley graphs); enables
            single-row shortcuts that are verified against the full
            computation in the test suite.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    vertex_transitive_hint: bool = False

    @property
    def edge_count(self) -> int:
        """Number of edges, loops counted once each."""
        total = 0
        for i in range(self.n):
            for j in range(i, self.n):
                if i == j:
                    total += self.adj[i][i] // 2
                else:
                    total += self.adj[i][j]
        return total

    def degree(self, v: int) -> int:
        return sum(self.adj[v])

    def as_numpy(self) -> np.ndarray:
        return np.array(self.adj, dtype=float)

    def neighbor_lists(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (neighbor, multiplicity) pairs.

        Loops appear as (v, adj[v][v]) so that multiplying by the
        adjacency matrix via these lists reproduces matrix products
        exactly.
        """
        out = []
        for j in range(self.n):
            out.append([(w, c) for w, c in enumerate(self.adj[j]) if c])
        return out


@dataclass(frozen=True)
class RegularityCertificate:
    """Witness that a graph is (q+1)-regular.

    Attributes:
        degree: the common degree q+1.
        q: degree minus one, the branching number of the universal cover.
        bipartite: whether the graph is bipartite.
        parts: the bipartition as two vertex tuples when bipartite,
            otherwise None.
    """

    degree: int
    q: int
    bipartite: bool
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None


def build_graph(n: int, edges: Iterable[Sequence[int]], *, vertex_transitive_hint: bool = False) -> Graph:
    """Build a Graph from an edge list.

    Each edge is (i, j) or (i, j, multiplicity).  A loop (i, i) with
    multiplicity c adds 2*c to adj[i][i].  Raises EmptyGraph for n <= 0
    and DisconnectedGraph when the result is not connected.
    """
    if n <= 0:
        raise EmptyGraph("graph must have at least one vertex")
    a = [[0] * n for _ in range(n)]
    for e in edges:
        if len(e) == 2:
            i, j = e
            c = 1
        elif len(e) == 3:
            i, j, c = e
        else:
            raise ParseError(f"edge {e!r} must have 2 or 3 components")
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"edge {e!r} references a vertex outside 0..{n - 1}")
        if c < 0:
            raise ParseError(f"edge {e!r} has negative multiplicity")
        if i == j:
            a[i][i] += 2 * c
        else:
            a[i][j] += c
            a[j][i] += c
    g = Graph(n, tuple(tuple(row) for row in a), vertex_transitive_hint)
    _require_connected(g)
    return g


def _require_connected(g: Graph) -> None:
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for w, c in enumerate(g.adj[v]):
            if c and not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    if count != g.n:
        raise DisconnectedGraph(f"graph has {g.n} vertices but only {count} reachable from vertex 0")


_CYCLE_RE = re.compile(r"^CYCLE\((\d+)\)$")


def named_graph(name: str) -> Graph:
    """Return one of the built-in graphs by name.

    Recognized: K4, K33, PETERSEN, CUBE, CYCLE(n) for n >= 3, and K3 as
    an alias for CYCLE(3).  Names are case-insensitive.
    """
    key = name.strip().upper().replace(" ", "")
    if key == "K3":
        key = "CYCLE(3)"
    m = _CYCLE_RE.match(key)
    if m:
        n = int(m.group(1))
        if n < 3:
            raise UnknownName(f"cycle length must be at least 3, got {n}")
        edges = [(i, (i + 1) % n) for i in range(n)]
        return build_graph(n, edges, vertex_transitive_hint=True)
    if key == "K4":
        return build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)], vertex_transitive_hint=True)
    if key == "K33":
        return build_graph(6, [(i, j) for i in range(3) for j in range(3, 6)], vertex_transitive_hint=True)
    if key == "PETERSEN":
        edges = []
        # outer 5-cycle, inner 5-cycle with step 2, and the five spokes
        for i in range(5):
            edges.append((i, (i + 1) % 5))
            edges.append((5 + i, 5 + (i + 2) % 5))
            edges.append((i, 5 + i))
        return build_graph(10, edges, vertex_transitive_hint=True)
    if key == "CUBE":
        edges = []
        for v in range(8):
            for b in range(3):
                w = v ^ (1 << b)
                if v < w:
                    edges.append((v, w))
        return build_graph(8, edges, vertex_transitive_hint=True)
    raise UnknownName(f"unknown graph name {name!r}")


def certify_regular(g: Graph) -> RegularityCertificate:
    """Check regularity and bipartiteness in one pass.

    Raises NotRegular (with the two offending degrees) when the graph is
    irregular.  Bipartiteness is decided by 2-coloring; the certificate
    carries the bipartition when one exists.
    """
    degs = [g.degree(v) for v in range(g.n)]
    d0 = degs[0]
    for d in degs[1:]:
        if d != d0:
            raise NotRegular(
                f"graph is not regular: degrees {d0} and {d} both occur",
                degrees=(d0, d),
            )
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    bipartite = True
    while queue and bipartite:
        v = queue.pop()
        if g.adj[v][v]:
            bipartite = False
            break
        for w, c in enumerate(g.adj[v]):
            if not c:
                continue
            if color[w] == -1:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                bipartite = False
                break
    parts = None
    if bipartite:
        parts = (
            tuple(v for v in range(g.n) if color[v] == 0),
            tuple(v for v in range(g.n) if color[v] == 1),
        )
    return RegularityCertificate(degree=d0, q=d0 - 1, bipartite=bipartite, parts=parts)


def _edges_canonical(g: Graph) -> list[list[int]]:
    out = []
    for i in range(g.n):
        for j in range(i, g.n):
            c = g.adj[i][i] // 2 if i == j else g.adj[i][j]
            if c:
                out.append([i, j, c])
    return out


def save_graph(g: Graph, dest: str | IO[str], *, fmt: str | None = None) -> None:
    """Write a graph to a path or file object.

    Formats: "json" ({"n": ..., "edges": [[i, j, mult], ...]}) or
    "edgelist" (a "n <count>" header line then one "i j [mult]" line per
    edge).  When fmt is None it is inferred from the path suffix,
    defaulting to edgelist for non-.json paths and file objects.
    """
    close = False
    if isinstance(dest, str):
        if fmt is None:
            fmt = "json" if dest.endswith(".json") else "edgelist"
        fh = open(dest, "w")
        close = True
    else:
        fh = dest
        if fmt is None:
            fmt = "edgelist"
    try:
        edges = _edges_canonical(g)
        if fmt == "json":
            json.dump({"n": g.n, "edges": edges}, fh, indent=1)
            fh.write("\n")
        elif fmt == "edgelist":
            fh.write(f"n {g.n}\n")
            for i, j, c in edges:
                if c == 1:
                    fh.write(f"{i} {j}\n")
                else:
                    fh.write(f"{i} {j} {c}\n")
        else:
            raise ValueError(f"unknown format {fmt!r}")
    finally:
        if close:
            fh.close()


def load_graph(src: str | IO[str]) -> Graph:
    """Read a graph written by save_graph, from a path or file object.

    The format is sniffed from the content: a leading "{" means JSON,
    anything else is treated as an edge list.  Raises ParseError with a
    line number on malformed input.
    """
    close = False
    if isinstance(src, str):
        fh = open(src)
        close = True
    else:
        fh = src
    try:
        text = fh.read()
    finally:
        if close:
            fh.close()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}", line=exc.lineno) from exc
        if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
            raise ParseError("JSON graph must have 'n' and 'edges' keys")
        try:
            return build_graph(int(doc["n"]), doc["edges"])
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad JSON graph payload: {exc}") from exc
    lines = text.splitlines()
    header = None
    edges = []
    for idx, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "n" or len(parts) != 2:
                raise ParseError("first line must be 'n <count>'", line=idx)
            try:
                header = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", line=idx)
            continue
        if len(parts) not in (2, 3):
            raise ParseError(f"edge line needs 2 or 3 fields, got {len(parts)}", line=idx)
        try:
            edge = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"non-integer edge field in {line!r}", line=idx)
        edges.append(edge)
    if header is None:
        raise ParseError("empty graph file", line=1)
    return build_graph(header, edges)
