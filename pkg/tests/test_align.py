from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from inflectkit.align import GAP, Alignment, align, classify_changes, split_zones
from oracles import brute_align_cost, columns_cost, minimal_alignments

words = st.text(alphabet="abc", min_size=1, max_size=6)


def test_schielen_alignment_matches_display():
    a = align("schielen", "geschielt")
    assert a.render() == ("--schielen", "geschielt-")
    assert a.cost == Fraction(41, 10)


def test_identity_alignment():
    a = align("a", "a")
    assert a.columns == (("a", "a"),)
    assert a.cost == 0


def test_substitution_beats_delete_insert():
    best, cost = minimal_alignments("ab", "ac")
    assert cost == 11
    assert align("ab", "ac").columns == (("a", "a"), ("b", "c"))
    assert align("ab", "ac").cost == Fraction(11, 10)


def test_leading_deletions():
    best, _ = minimal_alignments("ssa", "a")
    assert best == [(("s", GAP), ("s", GAP), ("a", "a"))]
    z = split_zones(align("ssa", "a"))
    assert z.prefix_pair == ("ss", "")
    assert z.core_pair == ("a", "a")


def test_split_schielen():
    z = split_zones(align("schielen", "geschielt"))
    assert z.prefix_pair == ("", "ge")
    assert z.core_pair == ("schielen", "schielt")
    assert z.core_columns[-1] == ("n", GAP)
    assert z.core_columns[-2] == ("e", "t")


def test_split_identity():
    z = split_zones(align("a", "a"))
    assert z.prefix_pair == ("", "")
    assert z.core_pair == ("a", "a")


def test_empty_input_rejected():
    with pytest.raises(ValueError):
        align("", "a")
    with pytest.raises(ValueError):
        align("a", "")


def test_double_gap_column_rejected():
    with pytest.raises(ValueError):
        Alignment(((GAP, GAP),), Fraction(0))


def test_unicode_scalars_and_spaces():
    a = align("no descomponer", "no descompongáis")
    assert a.source == "no descomponer"
    assert a.target == "no descompongáis"


@settings(max_examples=300, deadline=None)
@given(words, words)
def test_cost_matches_brute_force(x, y):
    a = align(x, y)
    assert a.cost == Fraction(brute_align_cost(x, y), 10)
    assert columns_cost(a.columns) == brute_align_cost(x, y)


@settings(max_examples=300, deadline=None)
@given(st.text(min_size=1, max_size=12), st.text(min_size=1, max_size=12))
def test_reconstruction_and_symmetry(x, y):
    a = align(x, y)
    assert a.source == x and a.target == y
    assert a.cost == align(y, x).cost
    assert align(x, y) == a


@settings(max_examples=200, deadline=None)
@given(words, words)
def test_chosen_alignment_is_among_minimal(x, y):
    best, _ = minimal_alignments(x, y)
    assert align(x, y).columns in best


def test_tie_break_prefers_diagonal_then_deletion_from_the_left():
    # "ab" -> "ba": deleting first or inserting first both cost 2.0
    assert align("ab", "ba").render() == ("ab-", "-ba")


@pytest.mark.parametrize("lemma, form, expected", [
    ("schielen", "geschielt", (True, True, False)),
    ("dog", "dogs", (False, True, False)),
    ("lachen", "gelachen", (True, False, False)),
    # equal-cost tie resolved towards the early diagonal: g/g e/e -/g -/e ...
    ("gehen", "gegehen", (False, False, True)),
    ("singen", "sangen", (False, False, True)),
    ("walk", "walk", (False, False, False)),
    ("ab", "ac", (False, True, False)),
])
def test_classify_changes(lemma, form, expected):
    assert tuple(classify_changes(align(lemma, form))) == expected
