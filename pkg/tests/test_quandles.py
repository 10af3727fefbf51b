import itertools

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from conftest import braid_words, letters_strategy
from toruscover import (
    BraidWord,
    ColoringSystem,
    StateCapExceeded,
    coloring_count,
    concat,
    constrained_count,
    crossing_action,
    dihedral,
    dihedral_coloring_count_fast,
    format_quandle_table,
    invert,
    parse_braid,
    parse_quandle_table,
    validate_quandle,
)
from toruscover.quandles import Quandle


TRIVIAL_2 = Quandle.from_table([[0, 0], [1, 1]])


class TestDihedral:
    def test_r3_table_row(self):
        assert dihedral(3).table[0] == (0, 2, 1)

    def test_idempotence(self):
        assert dihedral(3).op(1, 1) == 1

    def test_mod_five_product(self):
        assert dihedral(5).op(1, 3) == 0

    def test_rejects_small_modulus(self):
        with pytest.raises(ValueError):
            dihedral(2)

    @pytest.mark.parametrize("p", [3, 4, 5, 7])
    def test_dihedral_satisfies_axioms(self, p):
        assert validate_quandle(dihedral(p).table) == []

    def test_inverse_table_is_inverse(self):
        for q in (dihedral(3), dihedral(4), TRIVIAL_2):
            n = q.order
            for a in range(n):
                for b in range(n):
                    assert q.op(q.inv_op(a, b), b) == a
                    assert q.inv_op(q.op(a, b), b) == a


class TestValidateQuandle:
    def test_r3_passes(self):
        assert validate_quandle([[0, 2, 1], [2, 1, 0], [1, 0, 2]]) == []

    def test_broken_idempotence_names_witness(self):
        table = [[1, 2, 1], [2, 1, 0], [1, 0, 2]]
        violations = validate_quandle(table)
        assert ("idempotence", (0,)) in violations

    def test_trivial_quandle_passes(self):
        assert validate_quandle([[0, 0], [1, 1]]) == []

    def test_non_square_rejected(self):
        with pytest.raises(ValueError, match="square"):
            validate_quandle([[0, 1], [1]])

    def test_out_of_range_entry_rejected(self):
        with pytest.raises(ValueError, match="outside"):
            validate_quandle([[0, 5], [1, 1]])

    def test_broken_column_bijection(self):
        table = [[0, 0, 0], [1, 1, 1], [2, 2, 0]]
        violations = validate_quandle(table)
        assert any(axiom == "right-invertibility" for axiom, _ in violations)


class TestCrossingAction:
    def test_single_positive_crossing(self):
        assert crossing_action(dihedral(3), parse_braid("s1", 2), (0, 1)) == (1, 2)

    def test_identity_braid_fixes_everything(self):
        q = dihedral(3)
        word = parse_braid("e", 3)
        for colors in itertools.product(range(3), repeat=3):
            assert crossing_action(q, word, colors) == colors

    def test_crossing_and_inverse_cancel(self):
        q = dihedral(3)
        word = parse_braid("s1 s1^-1", 2)
        for colors in itertools.product(range(3), repeat=2):
            assert crossing_action(q, word, colors) == colors

    @pytest.mark.parametrize("q", [dihedral(3), dihedral(4), dihedral(5), TRIVIAL_2])
    def test_cancel_for_any_quandle_both_orders(self, q):
        for text in ("s1 s1^-1", "s1^-1 s1"):
            word = parse_braid(text, 2)
            for colors in itertools.product(range(q.order), repeat=2):
                assert crossing_action(q, word, colors) == colors

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="colors"):
            crossing_action(dihedral(3), parse_braid("s1", 2), (0, 1, 2))


class TestColoringCount:
    def test_trefoil(self):
        assert coloring_count(dihedral(3), parse_braid("s1^3", 2)) == 9

    def test_trivial_braid(self):
        for m in range(1, 5):
            assert coloring_count(dihedral(3), parse_braid("e", m)) == 3**m

    def test_single_crossing_only_constants(self):
        assert coloring_count(dihedral(3), parse_braid("s1", 2)) == 3

    @given(braid_words(max_degree=4, max_length=8))
    @settings(max_examples=50)
    def test_count_is_power_of_three_and_at_least_three(self, word):
        count = coloring_count(dihedral(3), word)
        assert count >= 3
        while count % 3 == 0:
            count //= 3
        assert count == 1

    @given(braid_words(max_degree=4, max_length=6), st.data())
    @settings(max_examples=40)
    def test_markov_moves_preserve_count(self, word, data):
        q = dihedral(3)
        u = BraidWord(word.degree, tuple(data.draw(letters_strategy(word.degree, 5))))
        conjugated = concat(concat(u, word), invert(u))
        assert coloring_count(q, word) == coloring_count(q, conjugated)
        sign = data.draw(st.sampled_from((1, -1)))
        stabilised = BraidWord(word.degree + 1, word.letters + ((word.degree, sign),))
        assert coloring_count(q, word) == coloring_count(q, stabilised)

    def test_state_cap(self):
        with pytest.raises(StateCapExceeded):
            coloring_count(dihedral(3), parse_braid("e", 30))


class TestFastPath:
    def test_matches_reported_values(self):
        assert dihedral_coloring_count_fast(3, parse_braid("s1^3", 2)) == 9
        assert dihedral_coloring_count_fast(3, parse_braid("e", 3)) == 27
        assert dihedral_coloring_count_fast(3, parse_braid("s1^3 s2^3", 3)) == 27

    def test_rejects_composite(self):
        with pytest.raises(ValueError, match="composite"):
            dihedral_coloring_count_fast(4, parse_braid("s1", 2))

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            dihedral_coloring_count_fast(2, parse_braid("s1", 2))

    @given(braid_words(max_degree=5, max_length=10), st.sampled_from((3, 5)))
    @settings(max_examples=60, deadline=None)
    def test_agrees_with_brute_force(self, word, p):
        assert dihedral_coloring_count_fast(p, word) == coloring_count(dihedral(p), word)

    def test_exhaustive_small_degree(self):
        q = dihedral(3)
        for length in range(5):
            for letters in itertools.product(
                [(1, 1), (1, -1), (2, 1), (2, -1)], repeat=length
            ):
                word = BraidWord(3, letters)
                assert dihedral_coloring_count_fast(3, word) == coloring_count(q, word)


class TestConstrainedCount:
    def test_no_constraints_reduces_to_count(self):
        word = parse_braid("s1^3", 2)
        system = ColoringSystem(dihedral(3), word)
        assert constrained_count(system) == 9

    def test_self_identification_changes_nothing(self):
        word = parse_braid("s1^3", 2)
        system = ColoringSystem(dihedral(3), word, (((2, 1), (2, 1)),))
        assert constrained_count(system) == 9

    def test_adjacent_level_identification(self):
        # pinning strand 1 before and after the first crossing forces a = b
        word = parse_braid("s1^3", 2)
        system = ColoringSystem(dihedral(3), word, (((0, 1), (1, 1)),))
        assert constrained_count(system) == 3

    def test_position_validation(self):
        word = parse_braid("s1^3", 2)
        with pytest.raises(ValueError, match="level"):
            ColoringSystem(dihedral(3), word, (((4, 1), (0, 1)),))
        with pytest.raises(ValueError, match="strand"):
            ColoringSystem(dihedral(3), word, (((0, 3), (0, 1)),))

    @given(braid_words(max_degree=3, max_length=5), st.data())
    @settings(max_examples=40)
    def test_constraints_never_increase_count(self, word, data):
        q = dihedral(3)
        k = len(word.letters)
        position = st.tuples(st.integers(0, k), st.integers(1, word.degree))
        pairs = data.draw(st.lists(st.tuples(position, position), max_size=3))
        base = coloring_count(q, word)
        constrained = constrained_count(ColoringSystem(q, word, tuple(pairs)))
        assert constrained <= base
        # k constraints divide the count by at most 3**k
        assert constrained * (3 ** len(pairs)) >= base


class TestTableFormat:
    def test_round_trip(self):
        q = dihedral(5)
        assert parse_quandle_table(format_quandle_table(q)) == q

    def test_parse_rejects_wrong_row_count(self):
        with pytest.raises(ValueError, match="rows"):
            parse_quandle_table("2\n0 0\n")

    def test_parse_rejects_non_quandle(self):
        with pytest.raises(ValueError, match="not a quandle"):
            parse_quandle_table("2\n1 0\n0 1\n")
