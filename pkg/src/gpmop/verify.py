"""Two independent general-position tests that must agree.

``is_gp_naive`` applies the definition: no member may lie on a geodesic
between two other members.  ``is_gp_characterized`` decides through the
clique-partition route: the components induced by the set must be complete
subgraphs whose blocks are pairwise distance-constant, with no block
sitting metrically between two others.  The naive form serves as the test
oracle for the characterized one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import (
    Disconnected,
    DistanceMatrix,
    Graph,
    VertexOutOfRange,
)


@dataclass(frozen=True)
class GpSetCheck:
    """Outcome of a general-position test.

    ``witness_violation`` is the lexicographically smallest ordered triple
    (a, b, c) with b on an a,c-geodesic, present exactly when the set fails.
    ``clique_partition`` is present when the set passes and the
    characterized route ran.
    """

    members: tuple[int, ...]
    is_gp: bool
    witness_violation: tuple[int, int, int] | None
    clique_partition: tuple[tuple[int, ...], ...] | None


def _prepare(g: Graph, dm: DistanceMatrix, s: Iterable[int]) -> tuple[int, ...]:
    members = tuple(sorted(set(s)))
    for v in members:
        if not 0 <= v < g.order:
            raise VertexOutOfRange(f"vertex {v} outside 0..{g.order - 1}")
    if not dm.connected:
        raise Disconnected("general position tests require a connected graph")
    return members


def _pair_distances(dm: DistanceMatrix, members: tuple[int, ...]) -> dict[tuple[int, int], int]:
    d: dict[tuple[int, int], int] = {}
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            d[a, b] = d[b, a] = int(dm.dist[a, b])
    return d


def _first_violation(
    members: tuple[int, ...], d: dict[tuple[int, int], int]
) -> tuple[int, int, int] | None:
    # Ordered scan keeps the reported triple lexicographically smallest,
    # with the middle vertex second.
    for a in members:
        for b in members:
            if b == a:
                continue
            for c in members:
                if c == a or c == b:
                    continue
                if d[a, c] == d[a, b] + d[b, c]:
                    return (a, b, c)
    return None


def is_gp_naive(g: Graph, dm: DistanceMatrix, s: Iterable[int]) -> GpSetCheck:
    """Definitional test over every ordered triple of distinct members."""
    members = _prepare(g, dm, s)
    if len(members) <= 2:
        return GpSetCheck(members, True, None, None)
    d = _pair_distances(dm, members)
    violation = _first_violation(members, d)
    return GpSetCheck(members, violation is None, violation, None)


def _induced_components(g: Graph, members: tuple[int, ...]) -> list[tuple[int, ...]]:
    member_set = set(members)
    seen: set[int] = set()
    blocks: list[tuple[int, ...]] = []
    for start in members:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for w in g.adjacency[u]:
                if w in member_set and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    frontier.append(w)
        blocks.append(tuple(sorted(comp)))
    blocks.sort()
    return blocks


def is_gp_characterized(g: Graph, dm: DistanceMatrix, s: Iterable[int]) -> GpSetCheck:
    """Clique-partition test.

    Passes exactly when (a) every component of the induced subgraph is
    complete, (b) the blocks are pairwise distance-constant, and (c) no
    block distance equals the sum of the distances through a third block.
    """
    members = _prepare(g, dm, s)
    blocks = _induced_components(g, members)
    d = _pair_distances(dm, members)

    ok = True
    for block in blocks:
        for i, a in enumerate(block):
            for b in block[i + 1 :]:
                if not g.has_edge(a, b):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break

    block_dist: list[list[int]] = []
    if ok:
        k = len(blocks)
        block_dist = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                val = d[blocks[i][0], blocks[j][0]]
                for a in blocks[i]:
                    for b in blocks[j]:
                        if d[a, b] != val:
                            ok = False
                            break
                    if not ok:
                        break
                block_dist[i][j] = block_dist[j][i] = val
                if not ok:
                    break
            if not ok:
                break

    if ok:
        k = len(blocks)
        for i in range(k):
            for j in range(k):
                if j == i:
                    continue
                for m in range(i + 1, k):
                    if m == j:
                        continue
                    if block_dist[i][m] == block_dist[i][j] + block_dist[j][m]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break

    if ok:
        return GpSetCheck(members, True, None, tuple(blocks))

    violation = _first_violation(members, d)
    if violation is None:
        raise RuntimeError(
            "clique-partition test rejected a set with no violating triple; "
            "the two general-position tests disagree"
        )
    return GpSetCheck(members, False, violation, None)
