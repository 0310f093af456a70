"""Maximal outerplanar graph recognition, certificates, and canonical keys.

Recognition avoids generic planarity testing.  A graph is accepted exactly
when it has 2n-3 edges, the edges lying in exactly one triangle close into
a single spanning cycle, and the remaining edges are pairwise non-crossing
chords of that cycle.  Every rejection names its evidence.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from .graph import (
    Disconnected,
    Graph,
    GraphError,
    UNREACHABLE,
    VertexOutOfRange,
    bfs_distances,
)


class NotAnMop(GraphError):
    """Base class for recognition rejections."""


class WrongEdgeCount(NotAnMop):
    pass


class EdgeInTooManyTriangles(NotAnMop):
    pass


class HullNotHamiltonian(NotAnMop):
    pass


class CrossingChords(NotAnMop):
    pass


class StructureViolation(NotAnMop):
    """A certificate is inconsistent with its graph."""


@dataclass(frozen=True)
class MopCertificate:
    """Hamiltonian cycle plus the non-crossing chord set of a triangulation.

    The cycle starts at vertex 0 and its second entry is the smaller of the
    two cycle neighbors of 0, so equal graphs yield equal certificates.
    """

    order: int
    cycle: tuple[int, ...]
    chords: frozenset[tuple[int, int]]

    def positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.cycle)}


@dataclass(frozen=True)
class MopStats:
    internal_triangles: int
    marginal_triangles: int
    two_vertices: int
    max_degree: int
    striped: bool
    faces: int


def _chords_cross(p: tuple[int, int], q: tuple[int, int]) -> bool:
    a, b = p
    c, d = q
    return (a < c < b < d) or (c < a < d < b)


def _normalized_cycle(cycle: list[int]) -> tuple[int, ...]:
    n = len(cycle)
    start = cycle.index(0)
    rotated = cycle[start:] + cycle[:start]
    if rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def recognize(g: Graph) -> MopCertificate:
    """Accept a maximal outerplanar graph, returning its certificate.

    Raises WrongEdgeCount, EdgeInTooManyTriangles, HullNotHamiltonian, or
    CrossingChords with the offending evidence, and Disconnected for
    graphs that are not connected.
    """
    n = g.order
    if n < 3:
        raise WrongEdgeCount(f"order {n} is below the minimum of 3")
    if UNREACHABLE in bfs_distances(g, 0):
        raise Disconnected("graph is not connected")
    expected = 2 * n - 3
    if len(g.edges) != expected:
        raise WrongEdgeCount(f"expected {expected} edges for order {n}, found {len(g.edges)}")
    if n == 3:
        return MopCertificate(3, (0, 1, 2), frozenset())

    adj_sets = [set(a) for a in g.adjacency]
    hull_adj: list[list[int]] = [[] for _ in range(n)]
    hull_edges: set[tuple[int, int]] = set()
    for u, v in sorted(g.edges):
        t = len(adj_sets[u] & adj_sets[v])
        if t > 2:
            raise EdgeInTooManyTriangles(f"edge ({u},{v}) lies in {t} triangles")
        if t == 1:
            hull_edges.add((u, v))
            hull_adj[u].append(v)
            hull_adj[v].append(u)

    bad = [v for v in range(n) if len(hull_adj[v]) != 2]
    if bad:
        raise HullNotHamiltonian(
            f"single-triangle edges give vertex {bad[0]} hull degree {len(hull_adj[bad[0]])}"
        )
    cycle = [0, min(hull_adj[0])]
    while len(cycle) < n:
        prev, cur = cycle[-2], cycle[-1]
        a, b = hull_adj[cur]
        nxt = b if a == prev else a
        if nxt == 0:
            break
        cycle.append(nxt)
    if len(cycle) < n or len(set(cycle)) < n:
        raise HullNotHamiltonian("single-triangle edges split into more than one cycle")

    chords = frozenset(e for e in g.edges if e not in hull_edges)
    pos = {v: i for i, v in enumerate(cycle)}
    chord_pos = sorted(
        (min(pos[u], pos[v]), max(pos[u], pos[v]), (u, v)) for u, v in chords
    )
    for i in range(len(chord_pos)):
        for j in range(i + 1, len(chord_pos)):
            a, b, e1 = chord_pos[i]
            c, d, e2 = chord_pos[j]
            if _chords_cross((a, b), (c, d)):
                raise CrossingChords(f"chords {e1} and {e2} cross on the hull cycle")

    return MopCertificate(n, _normalized_cycle(cycle), chords)


def check_certificate(g: Graph, cert: MopCertificate) -> None:
    """Cheap consistency check; raises StructureViolation on mismatch."""
    n = g.order
    if cert.order != n or sorted(cert.cycle) != list(range(n)):
        raise StructureViolation("certificate does not cover the vertex set")
    cycle_edges = set()
    for i, u in enumerate(cert.cycle):
        v = cert.cycle[(i + 1) % n]
        if not g.has_edge(u, v):
            raise StructureViolation(f"cycle step ({u},{v}) is not an edge")
        cycle_edges.add((u, v) if u < v else (v, u))
    if n >= 4 and cert.chords != g.edges - cycle_edges:
        raise StructureViolation("chord set does not match the off-cycle edges")
    if n >= 4 and len(cert.chords) != n - 3:
        raise StructureViolation(f"expected {n - 3} chords, certificate has {len(cert.chords)}")


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    adj_sets = [set(a) for a in g.adjacency]
    tris = []
    for u in range(g.order):
        for v in g.adjacency[u]:
            if v <= u:
                continue
            for w in sorted(adj_sets[u] & adj_sets[v]):
                if w > v:
                    tris.append((u, v, w))
    return tris


def mop_stats(g: Graph, cert: MopCertificate) -> MopStats:
    """Count inner faces, classify them as marginal or internal, and gather
    the degree statistics the census consumes.

    Every triangle of a maximal outerplanar graph is an inner face, so the
    face list is exactly the triangle list; a face is marginal when at
    least one side lies on the hull cycle.
    """
    n = g.order
    tris = _triangles(g)
    if len(tris) != n - 2:
        raise StructureViolation(f"expected {n - 2} inner faces, found {len(tris)}")
    cycle_edges = set()
    for i, u in enumerate(cert.cycle):
        v = cert.cycle[(i + 1) % n]
        cycle_edges.add((u, v) if u < v else (v, u))
    internal = 0
    for a, b, c in tris:
        if ((a, b) in cycle_edges or (b, c) in cycle_edges or (a, c) in cycle_edges):
            continue
        internal += 1
    two = sum(1 for v in range(n) if g.degree(v) == 2)
    return MopStats(
        internal_triangles=internal,
        marginal_triangles=len(tris) - internal,
        two_vertices=two,
        max_degree=g.max_degree,
        striped=internal == 0,
        faces=len(tris) + 1,
    )


def maximal_fan(g: Graph, cert: MopCertificate, v: int) -> tuple[int, ...]:
    """Order N(v) into the path of the largest fan centered at v.

    The neighborhood of any vertex of a maximal outerplanar graph induces a
    path; the fan on the closed neighborhood spans it entirely, so it
    cannot be enlarged.  Raises StructureViolation when the neighborhood is
    not a path, which indicates an invalid certificate.
    """
    if not 0 <= v < g.order:
        raise VertexOutOfRange(f"vertex {v} outside 0..{g.order - 1}")
    nbrs = g.adjacency[v]
    ns = set(nbrs)
    inside = {u: [w for w in g.adjacency[u] if w in ns] for u in nbrs}
    ends = sorted(u for u in nbrs if len(inside[u]) <= 1)
    if len(nbrs) == 1:
        return (nbrs[0],)
    if len(ends) != 2 or any(len(inside[u]) > 2 for u in nbrs):
        raise StructureViolation(f"neighborhood of {v} does not induce a path")
    path = [ends[0]]
    seen = {ends[0]}
    while len(path) < len(nbrs):
        steps = [w for w in inside[path[-1]] if w not in seen]
        if len(steps) != 1:
            raise StructureViolation(f"neighborhood of {v} does not induce a path")
        path.append(steps[0])
        seen.add(steps[0])
    if path[-1] != ends[1]:
        raise StructureViolation(f"neighborhood of {v} does not induce a path")
    return tuple(path)


def segment(cert: MopCertificate, u: int, v: int) -> tuple[int, ...]:
    """Hull vertices from u to v inclusive, following the stored orientation."""
    if u == v:
        raise ValueError("segment endpoints must differ")
    pos = cert.positions()
    if u not in pos or v not in pos:
        raise VertexOutOfRange(f"segment endpoints ({u},{v}) must lie on the cycle")
    n = cert.order
    i = pos[u]
    out = [u]
    while cert.cycle[i] != v:
        i = (i + 1) % n
        out.append(cert.cycle[i])
    return tuple(out)


def canonical_form(cert: MopCertificate) -> bytes:
    """Canonical key: chord positions minimized over all 2n dihedral relabelings.

    Isomorphisms of maximal outerplanar graphs must map the unique
    Hamiltonian cycle onto itself, so two certificates describe isomorphic
    graphs exactly when their keys match (at equal order).
    """
    n = cert.order
    pos = cert.positions()
    pairs = [(pos[u], pos[v]) for u, v in cert.chords]
    best: list[tuple[int, int]] | None = None
    for flip in (1, -1):
        for r in range(n):
            table = [(p * flip + r) % n for p in range(n)]
            mapped = sorted(
                (table[a], table[b]) if table[a] < table[b] else (table[b], table[a])
                for a, b in pairs
            )
            if best is None or mapped < best:
                best = mapped
    assert best is not None
    return b"".join(struct.pack(">HH", a, b) for a, b in best)


def same_mop(a: MopCertificate, b: MopCertificate) -> bool:
    return a.order == b.order and canonical_form(a) == canonical_form(b)


def certificate_to_text(cert: MopCertificate) -> str:
    cycle_line = "cycle: " + " ".join(str(v) for v in cert.cycle)
    chord_line = "chords: " + " ".join(f"({a},{b})" for a, b in sorted(cert.chords))
    return cycle_line + "\n" + chord_line.rstrip() + "\n"


def certificate_from_text(text: str) -> MopCertificate:
    """Parse and validate the two-line certificate format."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2 or not lines[0].startswith("cycle:") or not lines[1].startswith("chords:"):
        raise StructureViolation("expected 'cycle:' and 'chords:' lines")
    try:
        cycle = tuple(int(tok) for tok in lines[0][len("cycle:"):].split())
    except ValueError:
        raise StructureViolation("cycle entries must be integers") from None
    n = len(cycle)
    if n < 3 or sorted(cycle) != list(range(n)):
        raise StructureViolation("cycle must list every vertex exactly once")
    chord_toks = lines[1][len("chords:"):].split()
    chords: set[tuple[int, int]] = set()
    pos = {v: i for i, v in enumerate(cycle)}
    for tok in chord_toks:
        if not (tok.startswith("(") and tok.endswith(")")):
            raise StructureViolation(f"bad chord token {tok!r}")
        try:
            a, b = (int(x) for x in tok[1:-1].split(","))
        except ValueError:
            raise StructureViolation(f"bad chord token {tok!r}") from None
        if a == b or not (0 <= a < n and 0 <= b < n):
            raise StructureViolation(f"chord ({a},{b}) out of range")
        if abs(pos[a] - pos[b]) in (1, n - 1):
            raise StructureViolation(f"chord ({a},{b}) lies on the cycle")
        key = (a, b) if a < b else (b, a)
        if key in chords:
            raise StructureViolation(f"duplicate chord ({a},{b})")
        chords.add(key)
    if len(chords) != n - 3:
        raise StructureViolation(f"expected {n - 3} chords, found {len(chords)}")
    chord_pos = [
        (min(pos[a], pos[b]), max(pos[a], pos[b]), (a, b)) for a, b in sorted(chords)
    ]
    for i in range(len(chord_pos)):
        for j in range(i + 1, len(chord_pos)):
            a, b, e1 = chord_pos[i]
            c, d, e2 = chord_pos[j]
            if _chords_cross((a, b), (c, d)):
                raise CrossingChords(f"chords {e1} and {e2} cross on the hull cycle")
    rotated = _normalized_cycle(list(cycle))
    return MopCertificate(n, rotated, frozenset(chords))
