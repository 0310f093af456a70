"""Immutable simple graphs, BFS distances, and geodesic predicates.

Vertices are dense integers 0..order-1.  Distances live in a dense uint16
matrix so that censuses of many small graphs stay cache friendly; pairs in
different components hold the UNREACHABLE sentinel.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

UNREACHABLE = 0xFFFF


class GraphError(Exception):
    """Base class for every error this package raises on purpose."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class Disconnected(GraphError):
    pass


class EdgeListError(GraphError):
    """Malformed edge-list text."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; edges are normalized to (min, max) pairs."""

    order: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max(len(nbrs) for nbrs in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and normalize an edge list into a Graph.

    Rejects self-loops, duplicate edges, and endpoints outside 0..order-1,
    naming the offending pair in the error.
    """
    if order < 1:
        raise VertexOutOfRange(f"order must be >= 1, got {order}")
    seen: set[tuple[int, int]] = set()
    nbrs: list[list[int]] = [[] for _ in range(order)]
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"self-loop ({u},{v})")
        if not (0 <= u < order and 0 <= v < order):
            raise VertexOutOfRange(f"edge ({u},{v}) has an endpoint outside 0..{order - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge ({u},{v})")
        seen.add(key)
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(order, frozenset(seen), tuple(tuple(sorted(a)) for a in nbrs))


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs BFS hop counts; UNREACHABLE marks separated pairs."""

    order: int
    dist: np.ndarray

    def __post_init__(self) -> None:
        self.dist.setflags(write=False)

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return int(self.dist[pair])

    @property
    def connected(self) -> bool:
        return not bool((self.dist == UNREACHABLE).any())


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop counts from one source; UNREACHABLE where BFS never arrives."""
    dist = [UNREACHABLE] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    rows = [bfs_distances(g, s) for s in range(g.order)]
    return DistanceMatrix(g.order, np.array(rows, dtype=np.uint16))


def is_connected(g: Graph) -> bool:
    return UNREACHABLE not in bfs_distances(g, 0)


def _check_vertices(order: int, vertices: Iterable[int]) -> None:
    for v in vertices:
        if not 0 <= v < order:
            raise VertexOutOfRange(f"vertex {v} outside 0..{order - 1}")


def interval(g: Graph, dm: DistanceMatrix, u: int, v: int) -> frozenset[int]:
    """All vertices lying on at least one shortest u,v-path.

    A vertex w qualifies exactly when d(u,w) + d(w,v) == d(u,v).
    """
    _check_vertices(g.order, (u, v))
    duv = dm[u, v]
    if duv == UNREACHABLE:
        raise Disconnected(f"vertices {u} and {v} are in different components")
    total = dm.dist[u].astype(np.int32) + dm.dist[v].astype(np.int32)
    return frozenset(int(w) for w in np.nonzero(total == duv)[0])


def lies_on_geodesic(dm: DistanceMatrix, a: int, b: int, c: int) -> bool:
    """True when b sits on some shortest a,c-path."""
    _check_vertices(dm.order, (a, b, c))
    dab, dbc, dac = dm[a, b], dm[b, c], dm[a, c]
    if UNREACHABLE in (dab, dbc, dac):
        raise Disconnected(f"vertices {a}, {b}, {c} are not pairwise connected")
    return dac == dab + dbc


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    The first non-comment line is the vertex count; each following line is
    "u v" with 0-based integer endpoints.  Lines starting with '#' are
    comments and blank lines are ignored.  Duplicate or out-of-range
    entries are hard errors.
    """
    order: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if order is None:
            try:
                order = int(line)
            except ValueError:
                raise EdgeListError(f"line {lineno}: expected vertex count, got {line!r}") from None
            if order < 1:
                raise EdgeListError(f"line {lineno}: vertex count must be >= 1, got {order}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: endpoints must be integers, got {line!r}") from None
        edges.append((u, v))
    if order is None:
        raise EdgeListError("no vertex count line found")
    return build_graph(order, edges)


def format_edge_list(g: Graph, header: Iterable[str] = ()) -> str:
    """Serialize a graph back to edge-list text; header lines become '#' comments."""
    lines = [f"# {h}" for h in header]
    lines.append(str(g.order))
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
