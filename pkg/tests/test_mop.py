import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpmop import (
    CrossingChords,
    Disconnected,
    EdgeInTooManyTriangles,
    HullNotHamiltonian,
    StructureViolation,
    WrongEdgeCount,
    build_graph,
    canonical_form,
    certificate_from_text,
    certificate_to_text,
    fan,
    generalized_sunflower,
    maximal_fan,
    mop_stats,
    recognize,
    same_mop,
    segment,
    straight_linear_2tree,
)
from gpmop.census import certificate_from_chords, enumerate_triangulations, graph_from_chords
from helpers import graphs_isomorphic, relabeled


def complete_graph(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


class TestRecognize:
    def test_fan_accepted(self):
        cert = recognize(fan(6).graph)
        assert len(cert.chords) == 3
        assert cert.cycle[0] == 0
        assert cert.cycle[1] == min(cert.cycle[1], cert.cycle[-1])

    def test_triangle_special_case(self):
        cert = recognize(complete_graph(3))
        assert cert.cycle == (0, 1, 2) and cert.chords == frozenset()

    def test_k4_wrong_edge_count(self):
        with pytest.raises(WrongEdgeCount, match="expected 5 edges for order 4, found 6"):
            recognize(complete_graph(4))

    def test_three_page_book_rejected(self):
        # Two hub vertices with three common neighbors: 7 edges on 5
        # vertices passes the count but the hub edge sits in 3 triangles.
        g = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
        with pytest.raises(EdgeInTooManyTriangles, match=r"\(0,1\) lies in 3 triangles"):
            recognize(g)

    def test_crossed_chords_break_the_hull(self):
        # C5 plus crossing chords (0,2), (1,3): right edge count, no hull.
        g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (1, 3)])
        with pytest.raises(HullNotHamiltonian):
            recognize(g)

    def test_disconnected_rejected(self):
        g = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        with pytest.raises(Disconnected):
            recognize(g)

    def test_too_small(self):
        with pytest.raises(WrongEdgeCount):
            recognize(build_graph(2, [(0, 1)]))

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_every_triangulation_accepted(self, n):
        for chords in enumerate_triangulations(n):
            cert = recognize(graph_from_chords(n, chords))
            assert cert.chords == frozenset(chords)


class TestStats:
    def test_fan_is_striped(self):
        g = fan(9).graph
        st_ = mop_stats(g, recognize(g))
        assert st_.internal_triangles == 0
        assert st_.striped
        assert st_.two_vertices == 2
        assert st_.marginal_triangles == 7

    def test_generalized_sunflower_internals(self):
        g = generalized_sunflower(8).graph
        st_ = mop_stats(g, recognize(g))
        assert st_.internal_triangles == 2
        assert st_.two_vertices == 4
        assert not st_.striped

    def test_face_and_chord_counts_order_seven(self):
        for chords in enumerate_triangulations(7):
            g = graph_from_chords(7, chords)
            st_ = mop_stats(g, recognize(g))
            assert len(chords) == 4
            assert st_.faces == 6
            assert st_.internal_triangles + st_.marginal_triangles == 5


class TestMaximalFan:
    def test_fan_center_gives_whole_path(self):
        inst = fan(6)
        g = inst.graph
        cert = recognize(g)
        assert maximal_fan(g, cert, inst.role_map["v"]) == (0, 1, 2, 3, 4)

    def test_linear_2tree_interior_vertex(self):
        inst = straight_linear_2tree(8)
        g = inst.graph
        cert = recognize(g)
        assert maximal_fan(g, cert, inst.role_map["v4"]) == (1, 2, 4, 5)

    def test_degree_two_ear(self):
        inst = fan(6)
        g = inst.graph
        cert = recognize(g)
        p1 = inst.role_map["p1"]
        path = maximal_fan(g, cert, p1)
        assert set(path) == set(g.adjacency[p1])
        assert g.has_edge(*path)

    def test_every_neighborhood_is_a_path(self):
        for chords in enumerate_triangulations(7):
            g = graph_from_chords(7, chords)
            cert = certificate_from_chords(7, chords)
            for v in range(7):
                path = maximal_fan(g, cert, v)
                assert sorted(path) == list(g.adjacency[v])
                for a, b in zip(path, path[1:]):
                    assert g.has_edge(a, b)


class TestSegment:
    def test_forward(self):
        cert = certificate_from_chords(5, ((0, 2), (0, 3)))
        assert segment(cert, 1, 3) == (1, 2, 3)

    def test_wrap_around(self):
        cert = certificate_from_chords(5, ((0, 2), (0, 3)))
        assert segment(cert, 3, 1) == (3, 4, 0, 1)

    def test_two_segments_cover_the_cycle(self):
        cert = certificate_from_chords(6, ((0, 2), (0, 3), (0, 4)))
        a, b = segment(cert, 2, 5), segment(cert, 5, 2)
        assert a[-1] == b[0] and b[-1] == a[0]
        assert sorted(a[:-1] + b[:-1]) == list(range(6))

    def test_equal_endpoints_rejected(self):
        cert = certificate_from_chords(5, ((0, 2), (0, 3)))
        with pytest.raises(ValueError):
            segment(cert, 2, 2)


class TestCanonicalForm:
    def test_both_square_triangulations_collide(self):
        keys = {canonical_form(certificate_from_chords(4, c)) for c in enumerate_triangulations(4)}
        assert len(keys) == 1

    def test_pentagon_triangulations_are_one_class(self):
        # Oracle: every pair really is isomorphic.
        chord_sets = list(enumerate_triangulations(5))
        graphs = [graph_from_chords(5, c) for c in chord_sets]
        for other in graphs[1:]:
            assert graphs_isomorphic(graphs[0], other)
        keys = {canonical_form(certificate_from_chords(5, c)) for c in chord_sets}
        assert len(keys) == 1

    def test_fan_differs_from_linear_2tree(self):
        kf = canonical_form(recognize(fan(6).graph))
        kt = canonical_form(recognize(straight_linear_2tree(6).graph))
        assert kf != kt
        # Oracle: their degree profiles already differ.
        assert not graphs_isomorphic(fan(6).graph, straight_linear_2tree(6).graph)

    @given(st.integers(0, 10**9))
    @settings(max_examples=25, deadline=None)
    def test_relabeling_invariance(self, seed):
        rng = random.Random(seed)
        g = generalized_sunflower(8).graph
        perm = list(range(g.order))
        rng.shuffle(perm)
        h = relabeled(g, perm)
        assert canonical_form(recognize(g)) == canonical_form(recognize(h))

    def test_same_mop(self):
        a = recognize(fan(6).graph)
        b = recognize(straight_linear_2tree(6).graph)
        assert same_mop(a, a)
        assert not same_mop(a, b)
        assert not same_mop(recognize(complete_graph(3)), recognize(fan(4).graph))


class TestCertificateText:
    def test_round_trip(self):
        cert = recognize(generalized_sunflower(8).graph)
        text = certificate_to_text(cert)
        assert text.splitlines()[0].startswith("cycle: ")
        assert certificate_from_text(text) == cert

    def test_triangle_round_trip(self):
        cert = recognize(complete_graph(3))
        assert certificate_from_text(certificate_to_text(cert)) == cert

    def test_crossing_chords_rejected(self):
        text = "cycle: 0 1 2 3 4 5\nchords: (0,2) (1,3) (0,4)\n"
        with pytest.raises(CrossingChords):
            certificate_from_text(text)

    def test_wrong_chord_count_rejected(self):
        with pytest.raises(StructureViolation):
            certificate_from_text("cycle: 0 1 2 3 4\nchords: (0,2)\n")

    def test_cycle_chord_rejected(self):
        with pytest.raises(StructureViolation, match="lies on the cycle"):
            certificate_from_text("cycle: 0 1 2 3 4\nchords: (0,1) (0,3)\n")
