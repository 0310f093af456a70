"""Deterministic generators for the named graph families.

Each constructor returns the graph together with a role map (which vertex
plays center, petal, path position, ...) and, where a closed-form value is
known, the predicted general position number.  All families except the
sunflower are maximal outerplanar and pass recognition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graph import Graph, GraphError, build_graph
from .mop import CrossingChords, MopCertificate, _chords_cross, recognize


class BadParam(GraphError):
    pass


@dataclass(frozen=True, eq=False)
class FamilyInstance:
    label: str
    graph: Graph
    predicted_gp: int | None
    prediction_note: str | None
    role_map: Mapping[str, int]


def fan(n: int) -> FamilyInstance:
    """Join of one center with a path on n-1 vertices.

    Path vertices take ids 0..n-2 in order; the center is n-1.
    """
    if n < 3:
        raise BadParam(f"fan needs n >= 3, got {n}")
    center = n - 1
    edges = [(i, i + 1) for i in range(n - 2)]
    edges += [(center, i) for i in range(n - 1)]
    roles = {"v": center} | {f"p{i + 1}": i for i in range(n - 1)}
    if n >= 5:
        predicted, note = (2 * n) // 3, "two-thirds formula for fans of order >= 5"
    elif n == 3:
        predicted, note = 3, "triangle: a complete graph attains its order"
    else:
        predicted, note = None, None
    return FamilyInstance(f"fan({n})", build_graph(n, edges), predicted, note, roles)


def quasi_fan(i: int, n: int) -> FamilyInstance:
    """Fan of order n-1 plus one extra vertex glued onto path edge (p_i, p_i+1)."""
    if n < 6:
        raise BadParam(f"quasi-fan needs n >= 6, got {n}")
    if not 1 <= i <= n - 3:
        raise BadParam(f"quasi-fan index must be in 1..{n - 3}, got {i}")
    center, extra = n - 2, n - 1
    edges = [(k, k + 1) for k in range(n - 3)]
    edges += [(center, k) for k in range(n - 2)]
    edges += [(extra, i - 1), (extra, i)]
    roles = {"v": center, "u": extra} | {f"p{k + 1}": k for k in range(n - 2)}
    if n % 3 == 1:
        predicted, note = (2 * n) // 3, "quasi-fans attain the two-thirds bound at orders 1 mod 3"
    else:
        predicted, note = None, None
    return FamilyInstance(f"quasi_fan({i};{n})", build_graph(n, edges), predicted, note, roles)


def double_fan(j: int, t: int, n: int, variant: int) -> FamilyInstance:
    """Two fans glued at one vertex plus a single seam edge.

    The first fan has center v over path p_1..p_3t; the second fan's center
    u is identified with p_{3j-1} and spans path u_1..u_{n-3t-1}.  Variant 1
    adds the seam edge p_{3j-2} u_1; variant 2 adds p_{3j} u_{n-3t-1}.
    """
    if n < 6:
        raise BadParam(f"double fan needs n >= 6, got {n}")
    if not 1 <= t <= n // 3 - 1:
        raise BadParam(f"t must be in 1..{n // 3 - 1}, got {t}")
    if not 1 <= j <= t:
        raise BadParam(f"j must be in 1..{t}, got {j}")
    if variant not in (1, 2):
        raise BadParam(f"variant must be 1 or 2, got {variant}")
    m = n - 3 * t - 1
    center = 3 * t
    glued = 3 * j - 2
    second = list(range(3 * t + 1, n))
    edges = [(k, k + 1) for k in range(3 * t - 1)]
    edges += [(center, k) for k in range(3 * t)]
    edges += [(glued, w) for w in second]
    edges += [(second[k], second[k + 1]) for k in range(m - 1)]
    if variant == 1:
        edges.append((3 * j - 3, second[0]))
    else:
        edges.append((3 * j - 1, second[-1]))
    roles = {"v": center, "u": glued}
    roles |= {f"p{k + 1}": k for k in range(3 * t)}
    roles |= {f"u{k + 1}": second[k] for k in range(m)}
    if n % 3 == 1:
        predicted, note = (2 * n) // 3, "glued fans attain the two-thirds bound at orders 1 mod 3"
    else:
        predicted, note = None, None
    return FamilyInstance(
        f"g{variant}({j};{t};{n})", build_graph(n, edges), predicted, note, roles
    )


def straight_linear_2tree(n: int) -> FamilyInstance:
    """Vertices 1..n with edges exactly between indices at distance 1 or 2."""
    if n < 3:
        raise BadParam(f"straight linear 2-tree needs n >= 3, got {n}")
    edges = [(i, j) for i in range(n) for j in (i + 1, i + 2) if j < n]
    roles = {f"v{i + 1}": i for i in range(n)}
    if n >= 5:
        predicted, note = 3, "the unique minimum among striped triangulations"
    else:
        predicted, note = None, None
    return FamilyInstance(
        f"straight_linear_2tree({n})", build_graph(n, edges), predicted, note, roles
    )


def sunflower(m: int) -> FamilyInstance:
    """Wheel with hub v and an m-cycle rim, plus one petal per rim edge.

    Order 2m+1.  Not outerplanar for m >= 3, so it never goes through
    recognition; it exists as the motivating shape for the generalized
    form below.
    """
    if m < 3:
        raise BadParam(f"sunflower needs m >= 3, got {m}")
    hub = 0
    rim = list(range(1, m + 1))
    petals = list(range(m + 1, 2 * m + 1))
    edges = [(hub, r) for r in rim]
    edges += [(rim[i], rim[(i + 1) % m]) for i in range(m)]
    edges += [(petals[i], rim[i]) for i in range(m)]
    edges += [(petals[i], rim[(i + 1) % m]) for i in range(m)]
    roles = {"v": hub}
    roles |= {f"v{i}": rim[i] for i in range(m)}
    roles |= {f"u{i}": petals[i] for i in range(m)}
    return FamilyInstance(f"sunflower({m})", build_graph(2 * m + 1, edges), None, None, roles)


def _default_base_chords(m: int) -> frozenset[tuple[int, int]]:
    return frozenset((0, k) for k in range(2, m - 1))


def _validate_base_chords(m: int, chords) -> frozenset[tuple[int, int]]:
    normalized: set[tuple[int, int]] = set()
    for a, b in chords:
        if a > b:
            a, b = b, a
        if not (0 <= a < b < m):
            raise BadParam(f"base chord ({a},{b}) outside the {m}-gon")
        if b - a in (1, m - 1):
            raise BadParam(f"base chord ({a},{b}) is a polygon side")
        if (a, b) in normalized:
            raise BadParam(f"duplicate base chord ({a},{b})")
        normalized.add((a, b))
    if len(normalized) != m - 3:
        raise BadParam(f"a triangulated {m}-gon needs {m - 3} chords, got {len(normalized)}")
    items = sorted(normalized)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if _chords_cross(items[i], items[j]):
                raise CrossingChords(f"base chords {items[i]} and {items[j]} cross")
    return frozenset(normalized)


def generalized_sunflower(n: int, base_chords=None) -> FamilyInstance:
    """Triangulated polygon core with a degree-2 petal on (almost) every side.

    The core has m = ceil(n/2) vertices h_0..h_{m-1}; petal v_i attaches to
    h_i and h_{i+1 mod m}.  Even orders place a petal on every side, odd
    orders leave exactly one side bare.  The core triangulation defaults to
    a fan from h_0 and may be overridden by any non-crossing chord set.
    """
    if n < 5:
        raise BadParam(f"generalized sunflower needs n >= 5, got {n}")
    m = (n + 1) // 2
    x = m if n % 2 == 0 else m - 1
    if base_chords is None:
        chords = _default_base_chords(m)
    else:
        chords = _validate_base_chords(m, base_chords)
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += list(chords)
    petals = list(range(m, m + x))
    for i in range(x):
        edges.append((petals[i], i))
        edges.append((petals[i], (i + 1) % m))
    roles = {f"h{i}": i for i in range(m)}
    roles |= {f"v{i}": petals[i] for i in range(x)}
    if n >= 8:
        predicted, note = n // 2, "internal triangles + 2 for generalized sunflowers of order >= 8"
    elif n == 7:
        predicted, note = 4, "the order-7 generalized sunflower exceeds internal triangles + 2 by one"
    else:
        predicted, note = None, None
    return FamilyInstance(f"gsf({n})", build_graph(n, edges), predicted, note, roles)


def complete(n: int) -> FamilyInstance:
    if n < 1:
        raise BadParam(f"complete graph needs n >= 1, got {n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return FamilyInstance(
        f"complete({n})",
        build_graph(n, edges),
        n,
        "complete graphs attain their order",
        {f"v{i}": i for i in range(n)},
    )


def path(n: int) -> FamilyInstance:
    if n < 2:
        raise BadParam(f"path needs n >= 2, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)]
    return FamilyInstance(
        f"path({n})",
        build_graph(n, edges),
        2,
        "only the two endpoints of a path avoid its geodesics",
        {f"p{i + 1}": i for i in range(n)},
    )


def cycle(n: int) -> FamilyInstance:
    if n < 3:
        raise BadParam(f"cycle needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return FamilyInstance(
        f"cycle({n})", build_graph(n, edges), None, None, {f"v{i}": i for i in range(n)}
    )


def is_generalized_sunflower(g: Graph, cert: MopCertificate) -> bool:
    """Structural petal test, independent of the core triangulation.

    Requires floor(n/2) degree-2 vertices alternating around the hull, each
    closing a triangle with its two neighbors, such that deleting them all
    leaves a triangulated polygon.
    """
    n = g.order
    if n < 5:
        return False
    petals = [v for v in range(n) if g.degree(v) == 2]
    if len(petals) != n // 2:
        return False
    pset = set(petals)
    for idx, v in enumerate(cert.cycle):
        if v in pset and cert.cycle[(idx + 1) % n] in pset:
            return False
    for v in petals:
        a, b = g.adjacency[v]
        if not g.has_edge(a, b):
            return False
    base = [v for v in range(n) if v not in pset]
    relabel = {v: i for i, v in enumerate(base)}
    base_edges = [
        (relabel[u], relabel[w]) for u, w in g.edges if u not in pset and w not in pset
    ]
    if len(base) == 3:
        return len(base_edges) == 3
    try:
        recognize(build_graph(len(base), base_edges))
    except GraphError:
        return False
    return True


def generators_at(n: int) -> list[tuple[str, FamilyInstance]]:
    """Every maximal outerplanar generator instance at one order, paired
    with the short label the census uses for family tagging."""
    out: list[tuple[str, FamilyInstance]] = [("fan", fan(n))]
    if n >= 6:
        for i in range(1, n - 2):
            out.append((f"quasi_fan({i})", quasi_fan(i, n)))
        for t in range(1, n // 3):
            for j in range(1, t + 1):
                for variant in (1, 2):
                    out.append((f"g{variant}({j},{t})", double_fan(j, t, n, variant)))
    out.append(("straight_linear_2tree", straight_linear_2tree(n)))
    return out
