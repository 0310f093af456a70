"""Shared test helpers: independent oracles and random graph builders.

The oracles deliberately avoid the package's own code paths: distances
come from Floyd-Warshall instead of BFS, maximum sets from full bitmask
enumeration instead of branch and bound, and isomorphism from raw
permutation search instead of canonical keys.
"""

from __future__ import annotations

import random
from itertools import permutations

from gpmop import Graph, build_graph

BIG = 10**6


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree plus Bernoulli extra edges; always connected."""
    order = list(range(n))
    rng.shuffle(order)
    edges: set[tuple[int, int]] = set()
    for i in range(1, n):
        a, b = order[rng.randrange(i)], order[i]
        edges.add((min(a, b), max(a, b)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    return build_graph(n, sorted(edges))


def floyd_warshall(g: Graph) -> list[list[int]]:
    n = g.order
    d = [[BIG] * n for _ in range(n)]
    for v in range(n):
        d[v][v] = 0
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik >= BIG:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def exhaustive_interval(g: Graph, u: int, v: int) -> frozenset[int]:
    """Vertices on at least one shortest u,v-path, by enumerating every
    simple path between them."""
    best_len: int | None = None
    on_shortest: set[int] = set()

    def walk(node: int, visited: list[int]) -> None:
        nonlocal best_len, on_shortest
        if node == v:
            length = len(visited) - 1
            if best_len is None or length < best_len:
                best_len = length
                on_shortest = set(visited)
            elif length == best_len:
                on_shortest |= set(visited)
            return
        for w in g.adjacency[node]:
            if w not in visited:
                visited.append(w)
                walk(w, visited)
                visited.pop()

    walk(u, [u])
    return frozenset(on_shortest)


def geodesic_triples(g: Graph) -> list[int]:
    """Bitmasks of every unordered triple with one member between the others,
    computed from Floyd-Warshall distances."""
    d = floyd_warshall(g)
    out = []
    n = g.order
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                dab, dac, dbc = d[a][b], d[a][c], d[b][c]
                if dac == dab + dbc or dab == dac + dbc or dbc == dab + dac:
                    out.append((1 << a) | (1 << b) | (1 << c))
    return out


def brute_force_gp(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Maximum general position set by full 2^n enumeration; ties resolved
    toward the lexicographically smallest sorted vertex list."""
    conflicts = geodesic_triples(g)
    n = g.order
    best_size = -1
    best: tuple[int, ...] = ()
    for mask in range(1 << n):
        size = mask.bit_count()
        if size < best_size:
            continue
        if any(mask & t == t for t in conflicts):
            continue
        members = tuple(v for v in range(n) if (mask >> v) & 1)
        if size > best_size or (size == best_size and members < best):
            best_size = size
            best = members
    return best_size, best


def brute_force_is_gp(g: Graph, members: tuple[int, ...]) -> bool:
    mask = 0
    for v in members:
        mask |= 1 << v
    return not any(mask & t == t for t in geodesic_triples(g))


def graphs_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Permutation search; fine for the tiny orders the tests use."""
    if g1.order != g2.order or len(g1.edges) != len(g2.edges):
        return False
    deg1 = sorted(len(a) for a in g1.adjacency)
    deg2 = sorted(len(a) for a in g2.adjacency)
    if deg1 != deg2:
        return False
    for perm in permutations(range(g1.order)):
        if all(
            ((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])) in g2.edges
            for u, v in g1.edges
        ):
            return True
    return False


def relabeled(g: Graph, perm: list[int]) -> Graph:
    return build_graph(g.order, [(perm[u], perm[v]) for u, v in g.edges])
