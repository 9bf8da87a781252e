import pytest
from hypothesis import given, strategies as st

from inflectkit.core import (ColumnOrder, Dataset, FeatureBundle, FormatError, Paradigm, Triple,
                             flatten, parse_paradigms, parse_triples, serialize_paradigms,
                             serialize_triples)

field_chars = st.characters(blacklist_characters="\t\n\r", blacklist_categories=("Cs",))
fields = st.text(field_chars, min_size=1, max_size=8).filter(lambda s: s.strip())
tags = st.text(st.characters(blacklist_characters="\t\n\r;", blacklist_categories=("Cs",)),
               min_size=1, max_size=5)
bundles = st.lists(tags, min_size=1, max_size=4).map(lambda ts: FeatureBundle(tuple(ts)))
triples = st.builds(Triple, fields, bundles, fields)


def test_parse_released_order():
    [t] = parse_triples("hug\thugged\tV;PST")
    assert t == Triple("hug", FeatureBundle(("V", "PST")), "hugged")


def test_parse_table_order():
    [t] = parse_triples("hug\tV;PST\thugged\n", ColumnOrder.LEMMA_TAGS_FORM)
    assert t.form == "hugged" and t.bundle.key == "V;PST"


def test_empty_document():
    assert parse_triples("") == []
    assert serialize_triples([]) == ""


def test_two_fields_is_error_with_line_number():
    with pytest.raises(FormatError) as info:
        parse_triples("a\tb")
    assert info.value.lineno == 1
    assert "a\\tb" in str(info.value)


def test_empty_field_is_error():
    with pytest.raises(FormatError) as info:
        parse_triples("x\ty\tV\n\na\t\tV")
    assert info.value.lineno == 3


def test_blank_lines_skipped_and_multiword_kept():
    ts = parse_triples("\ndescomponer\tno descompongáis\tV;NEG;IMP;2;PL\n\n")
    assert ts[0].form == "no descompongáis"


def test_serialize_example():
    assert serialize_triples([Triple("hug", "V;PST", "hugged")]) == "hug\thugged\tV;PST\n"


@given(st.lists(triples, max_size=6), st.sampled_from(list(ColumnOrder)))
def test_round_trip(ts, order):
    text = serialize_triples(ts, order)
    assert parse_triples(text, order) == ts
    assert len([line for line in text.split("\n") if line.strip()]) == len(ts)


@given(bundles)
def test_canonical_key_round_trip(b):
    assert FeatureBundle.parse(b.key) == b
    assert FeatureBundle.parse(b.key).tags == b.tags


def test_tag_order_is_significant():
    assert FeatureBundle(("V", "PST")).key != FeatureBundle(("PST", "V")).key


@pytest.mark.parametrize("bad", [(), ("",), ("a;b",), ("a\tb",)])
def test_bad_bundles(bad):
    with pytest.raises(ValueError):
        FeatureBundle(bad)


def test_bad_triple_fields():
    with pytest.raises(ValueError):
        Triple("", "V", "x")
    with pytest.raises(ValueError):
        Triple("a\tb", "V", "x")


def test_parse_paradigm_with_missing_cell():
    text = "revocar\trevocábamos\tV;IND;PST;1;PL;IPFV\nrevocar\t\tV;NEG;IMP;3;SG\n"
    [p] = parse_paradigms(text)
    assert p.lemma == "revocar"
    assert p.cells[0] == (FeatureBundle.parse("V;IND;PST;1;PL;IPFV"), "revocábamos")
    assert p.cells[1] == (FeatureBundle.parse("V;NEG;IMP;3;SG"), None)
    assert p.missing() == [FeatureBundle.parse("V;NEG;IMP;3;SG")]


def test_single_line_paradigm():
    [p] = parse_paradigms("a\tb\tN;SG")
    assert len(p.cells) == 1


def test_grouping_by_lemma_and_blank_line():
    text = "a\ta1\tX\na\ta2\tY\nb\tb1\tX\n\nb\tb2\tX\n"
    ps = parse_paradigms(text)
    assert [p.lemma for p in ps] == ["a", "b", "b"]
    assert [len(p.cells) for p in ps] == [2, 1, 1]


def test_duplicate_bundle_in_paradigm():
    with pytest.raises(FormatError) as info:
        parse_paradigms("a\tx\tV;PST\na\ty\tV;PST\n")
    assert info.value.lineno == 2


def test_paradigm_round_trip_keeps_same_lemma_neighbours_apart():
    ps = [Paradigm("a", (("X", "a1"), ("Y", None))), Paradigm("a", (("X", "a2"),))]
    assert parse_paradigms(serialize_paradigms(ps)) == ps


def test_flatten_rejects_unfilled():
    with pytest.raises(ValueError):
        flatten([Paradigm("a", (("X", None),))])


def test_dataset_is_homogeneous():
    with pytest.raises(ValueError):
        Dataset("low", triples=[Triple("a", "X", "b")], paradigms=[Paradigm("a", (("X", "b"),))])
    assert len(Dataset("dev", triples=[Triple("a", "X", "b")])) == 1
