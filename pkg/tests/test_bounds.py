import itertools
import json
import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from conftest import braid_words
from toruscover import (
    BoundsReport,
    BraidWord,
    ChartValidationError,
    chart_coloring_count,
    closure_component_count,
    coloring_count,
    coloring_lower_bound,
    constrained_count_for_pairs,
    dihedral,
    free_edge_upper_bound,
    grid_positions,
    handle_surgery_experiment,
    new_chart,
    parse_braid,
    phi_drop_satisfied,
    power,
    spun_chart,
    triple_twist_chain,
    turn,
    turned_spun_chart,
    unknotting_bounds,
    unknotting_table,
)
from toruscover.dichotomy import pair_counts


class TestChartColoringCount:
    def test_spun_equals_classical(self):
        beta = parse_braid("s1^3", 2)
        assert chart_coloring_count(spun_chart(beta), dihedral(3)) == 9

    def test_turned_spun_equals_classical(self):
        beta = triple_twist_chain(2)
        assert chart_coloring_count(turned_spun_chart(beta), dihedral(3)) == 27

    def test_both_actions_constrain(self):
        # v fixes everything, h is a single crossing: only constants survive
        chart = new_chart(2, parse_braid("e", 2), parse_braid("s1", 2))
        assert chart_coloring_count(chart, dihedral(3)) == 3


class TestColoringLowerBound:
    def test_spun_trefoil(self):
        assert coloring_lower_bound(spun_chart(parse_braid("s1^3", 2))) == 1

    def test_trivial_covering_knot(self):
        assert coloring_lower_bound(spun_chart(parse_braid("e", 1))) == 0

    def test_turned_spun_chain(self):
        assert coloring_lower_bound(turned_spun_chart(triple_twist_chain(2))) == 2

    def test_rejects_links(self):
        with pytest.raises(ChartValidationError, match="knot"):
            coloring_lower_bound(spun_chart(parse_braid("e", 2)))

    def test_rejects_black_vertices(self):
        chart = new_chart(2, parse_braid("e", 2), parse_braid("s1", 2), black_vertices=1)
        with pytest.raises(ChartValidationError, match="black"):
            coloring_lower_bound(chart)

    def test_fast_method_matches_brute(self):
        beta = triple_twist_chain(3)
        chart = spun_chart(beta)
        assert coloring_lower_bound(chart, method="fast") == coloring_lower_bound(
            chart, method="brute"
        )

    def test_invariant_under_turn(self):
        rng = random.Random(23)
        found = 0
        while found < 10:
            m = rng.randrange(2, 4)
            letters = tuple(
                (rng.randrange(1, m), rng.choice((1, -1)))
                for _ in range(rng.randrange(1, 7))
            )
            beta = BraidWord(m, letters)
            if closure_component_count(beta) != 1:
                continue
            found += 1
            chart = spun_chart(beta)
            assert coloring_lower_bound(chart) == coloring_lower_bound(turn(chart))


class TestFreeEdgeUpperBound:
    def test_unknotted_presentation_gives_zero(self):
        chart = new_chart(
            2, parse_braid("e", 2), parse_braid("e", 2), free_edges=[1], black_vertices=2
        )
        assert free_edge_upper_bound(chart) == 0

    def test_vertex_free_gives_degree_minus_one(self):
        assert free_edge_upper_bound(spun_chart(parse_braid("s1^3", 2))) == 1

    def test_white_vertices_give_no_bound(self):
        chart = new_chart(
            3, parse_braid("s1", 3), parse_braid("s2", 3),
            black_vertices=2, white_vertices=1,
        )
        assert free_edge_upper_bound(chart) is None

    def test_loops_count_as_no_white_vertices(self):
        chart = new_chart(3, parse_braid("e", 3), parse_braid("e", 3), loops=[1, 2])
        assert free_edge_upper_bound(chart) == 2


class TestUnknottingBounds:
    def test_chain_n3_exact(self):
        report = unknotting_bounds(spun_chart(triple_twist_chain(3)))
        assert (report.lower, report.upper, report.exact) == (3, 3, 3)

    def test_turned_trefoil_exact(self):
        report = unknotting_bounds(turned_spun_chart(parse_braid("s1^3", 2)))
        assert report.exact == 1

    def test_trivial_chart(self):
        report = unknotting_bounds(spun_chart(parse_braid("e", 1)))
        assert (report.lower, report.upper, report.exact) == (0, 0, 0)
        assert report.coloring_count == 3

    def test_exact_only_when_bounds_meet(self):
        report = unknotting_bounds(spun_chart(parse_braid("s1", 2)))
        # unknot: lower 0, upper m - 1 = 1, so no exact value
        assert report.lower == 0
        assert report.upper == 1
        assert report.exact is None

    def test_family_exact_small(self):
        for n in (1, 2, 3):
            beta = triple_twist_chain(n)
            assert unknotting_bounds(spun_chart(beta)).exact == n
            assert unknotting_bounds(turned_spun_chart(beta)).exact == n

    def test_notes_mark_heuristic_pairs(self):
        # commuting pair that is not spun or turned spun: (s1^3, s1^9)
        beta = parse_braid("s1^3", 2)
        chart = new_chart(2, beta, power(beta, 3))
        report = unknotting_bounds(chart)
        assert any("heuristic" in note for note in report.notes)

    def test_classical_pairs_not_marked_heuristic(self):
        report = unknotting_bounds(turned_spun_chart(parse_braid("s1^3", 2), h_inverse=True))
        assert not any("heuristic" in note for note in report.notes)

    def test_report_round_trips_through_json(self):
        report = unknotting_bounds(spun_chart(triple_twist_chain(2)))
        assert BoundsReport.from_dict(json.loads(json.dumps(report.to_dict()))) == report


class TestHandleSurgeryExperiment:
    def test_trefoil_counts_are_nine_or_three(self):
        results = handle_surgery_experiment(parse_braid("s1^3", 2))
        counts = {count for _pair, count in results}
        assert counts == {9, 3}

    def test_unlink_strand_identification(self):
        results = dict(handle_surgery_experiment(BraidWord(2)))
        assert results[((0, 1), (0, 2))] == 3

    def test_self_pairs_leave_count(self):
        word = parse_braid("s1^3", 2)
        phi = coloring_count(dihedral(3), word)
        for (pos1, pos2), count in handle_surgery_experiment(word):
            if pos1 == pos2:
                assert count == phi

    def test_chain_two_needs_two_constraints(self):
        word = triple_twist_chain(2)
        positions = grid_positions(word)
        pairs = [
            (p1, p2) for i, p1 in enumerate(positions) for p2 in positions[i:]
        ]
        singles = [constrained_count_for_pairs(word, [pair]) for pair in pairs]
        assert 3 not in singles
        droppers = [pair for pair, count in zip(pairs, singles) if count == 9]
        assert any(
            constrained_count_for_pairs(word, [p1, p2]) == 3
            for p1, p2 in itertools.combinations(droppers[:12], 2)
        )

    @given(braid_words(max_degree=3, max_length=6))
    @settings(max_examples=25, deadline=None)
    def test_drop_dichotomy_sampled(self, word):
        assert phi_drop_satisfied(word)

    def test_matches_compiled_kernel(self):
        rng = random.Random(3)
        for _ in range(20):
            m = rng.randrange(1, 4)
            length = rng.randrange(0, 7) if m > 1 else 0
            word = BraidWord(
                m, tuple((rng.randrange(1, m), rng.choice((1, -1))) for _ in range(length))
            )
            counts, fixed = pair_counts(word)
            expected = dict(handle_surgery_experiment(word))
            positions = grid_positions(word)
            assert fixed == coloring_count(dihedral(3), word)
            for i, pos1 in enumerate(positions):
                for j, pos2 in enumerate(positions):
                    if i <= j:
                        assert counts[i, j] == expected[(pos1, pos2)]


class TestUnknottingTable:
    def test_rows_meet_at_n(self):
        rows = unknotting_table(3)
        assert len(rows) == 6
        for row in rows:
            assert row["exact"] == row["n"]
            assert row["coloring_count"] == 3 ** (row["n"] + 1)

    def test_fast_rows_match_brute_rows(self):
        brute = unknotting_table(3, brute_limit=6)
        fast = unknotting_table(3, brute_limit=0)
        for a, b in zip(brute, fast):
            assert a == b
