import re
from math import comb

import pytest

from gpmop import (
    BadParam,
    all_pairs_distances,
    canonical_form,
    catalan,
    census_to_csv,
    claim_report_text,
    enumerate_triangulations,
    is_gp_characterized,
    is_gp_naive,
    recognize,
    run_census,
    verify_paper_claims,
)
from gpmop.census import graph_from_chords
from helpers import graphs_isomorphic


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(4, 2), (5, 5), (6, 14)])
    def test_small_counts(self, n, count):
        assert len(list(enumerate_triangulations(n))) == count

    @pytest.mark.parametrize("n", range(3, 10))
    def test_stream_length_matches_closed_form(self, n):
        # Oracle: the central binomial expression, not the recursion.
        k = n - 2
        assert len(list(enumerate_triangulations(n))) == comb(2 * k, k) // (k + 1)
        assert catalan(k) == comb(2 * k, k) // (k + 1)

    def test_no_duplicates(self):
        seen = list(enumerate_triangulations(8))
        assert len(seen) == len(set(seen))

    def test_every_yield_is_a_triangulation(self):
        for chords in enumerate_triangulations(6):
            cert = recognize(graph_from_chords(6, chords))
            assert cert.chords == frozenset(chords)

    def test_range_checks(self):
        with pytest.raises(BadParam):
            list(enumerate_triangulations(2))
        with pytest.raises(BadParam):
            list(enumerate_triangulations(15))


class TestRunCensus:
    def test_pentagon_collapses_to_the_fan(self):
        recs = run_census(5, dedupe=True)
        assert len(recs) == 1
        assert "fan" in recs[0].family_labels

    def test_hexagon_classes_match_isomorphism_oracle(self):
        # Oracle: group all 14 labeled triangulations by raw permutation search.
        graphs = [graph_from_chords(6, c) for c in enumerate_triangulations(6)]
        groups: list[list[int]] = []
        for i, g in enumerate(graphs):
            for group in groups:
                if graphs_isomorphic(graphs[group[0]], g):
                    group.append(i)
                    break
            else:
                groups.append([i])
        assert len(groups) == 3
        recs = run_census(6, dedupe=True)
        assert len(recs) == 3

    def test_hexagon_respects_the_cap(self):
        assert all(r.gp <= 4 for r in run_census(6, dedupe=False))

    def test_record_invariants(self):
        for rec in run_census(7, dedupe=False):
            assert rec.two_vertices == rec.internal_triangles + 2
            assert len(rec.chords) == 4
            assert rec.striped == (rec.internal_triangles == 0)
            assert rec.gp >= 3
            assert rec.gp >= (2 * (rec.max_degree + 1)) // 3
            assert rec.gp >= rec.internal_triangles + 2

    def test_witnesses_verify_both_ways(self):
        for rec in run_census(7, dedupe=True):
            g = graph_from_chords(7, rec.chords)
            dm = all_pairs_distances(g)
            assert is_gp_naive(g, dm, rec.gp_witness).is_gp
            assert is_gp_characterized(g, dm, rec.gp_witness).is_gp

    def test_dedupe_idempotent(self):
        recs = run_census(7, dedupe=True)
        keys = {r.canonical_key for r in recs}
        rebuilt = {
            canonical_form(recognize(graph_from_chords(7, r.chords))) for r in recs
        }
        assert rebuilt == keys

    def test_records_sorted_by_key(self):
        recs = run_census(6, dedupe=False)
        assert [(r.canonical_key, r.chords) for r in recs] == sorted(
            (r.canonical_key, r.chords) for r in recs
        )

    def test_jobs_do_not_change_output(self):
        base = census_to_csv(run_census(7, dedupe=False, jobs=1))
        assert base == census_to_csv(run_census(7, dedupe=False, jobs=2))
        dd = census_to_csv(run_census(7, dedupe=True, jobs=1))
        assert dd == census_to_csv(run_census(7, dedupe=True, jobs=3))

    def test_fan_labeled_at_every_order(self):
        for n in (5, 6, 7, 8):
            recs = run_census(n, dedupe=True)
            assert sum(1 for r in recs if "fan" in r.family_labels) == 1

    def test_range_checks(self):
        with pytest.raises(BadParam):
            run_census(2)


class TestCsv:
    def test_header_and_shape(self):
        text = census_to_csv(run_census(6, dedupe=True))
        lines = text.splitlines()
        assert lines[0] == (
            "n,canonical_key,gp,max_degree,internal_triangles,two_vertices,"
            "striped,families,chords,witness"
        )
        assert len(lines) == 4
        first = lines[1].split(",")
        assert first[0] == "6"
        assert re.fullmatch(r"[0-9a-f]*", first[1])

    def test_chord_and_witness_fields_round_trip(self):
        recs = run_census(6, dedupe=True)
        rows = census_to_csv(recs).splitlines()[1:]
        for rec, row in zip(recs, rows):
            fields = row.split(",")
            chords = tuple(
                tuple(int(x) for x in pair.split("-")) for pair in fields[-2].split(";")
            )
            witness = tuple(int(x) for x in fields[-1].split(";"))
            assert chords == rec.chords
            assert witness == rec.gp_witness


class TestClaims:
    def test_hexagon_extremal_class_is_the_fan(self):
        reports = {r.claim: r for r in verify_paper_claims(6, 6)}
        assert reports["upper_bound_extremal"].status == "pass"
        assert reports["global_upper_bound"].status == "pass"

    def test_order_seven_internal_triangle_maximum(self):
        reports = {r.claim: r for r in verify_paper_claims(7, 7)}
        assert reports["internal_triangle_max"].status == "pass"
        assert reports["internal_lower_bound"].status == "pass"

    def test_identity_claims_over_a_range(self):
        reports = verify_paper_claims(4, 8)
        for rep in reports:
            if rep.claim in ("two_vertex_count", "chord_count"):
                assert rep.status == "pass"
                assert rep.checked > 0

    def test_report_line_format(self):
        reports = verify_paper_claims(5, 5)
        pattern = re.compile(r"CLAIM \S+ n=\d+ checked=\d+ violations=\d+ status=(pass|fail)")
        for line in claim_report_text(reports).splitlines():
            assert pattern.fullmatch(line)

    def test_range_checks(self):
        with pytest.raises(BadParam):
            verify_paper_claims(3, 5)
        with pytest.raises(BadParam):
            verify_paper_claims(5, 14)
