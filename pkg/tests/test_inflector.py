import random

import pytest
from hypothesis import given, settings, strategies as st

from inflectkit.core import Triple
from inflectkit.inflector import Model, Orientation, change_counts, detect_orientation, inflect, train
from inflectkit.rules import PrefixRule, RuleStore, SuffixRule
from synthetic import prefixing_language, reverse_triples, suffixing_language

SCHIELEN = Triple("schielen", "V;V.PTCP;PST", "geschielt")


def test_schielen_model():
    m = train([SCHIELEN])
    assert m.orientation is Orientation.SUFFIXING
    assert len(m.store.suffix_rules["V;V.PTCP;PST"]) == 8
    assert dict(m.store.prefix_rules["V;V.PTCP;PST"]) == {PrefixRule("", "ge"): 1}
    assert inflect(m, "kaufen", "V;V.PTCP;PST") == "gekauft"


def test_copy_for_unseen_bundle():
    assert inflect(train([SCHIELEN]), "kaufen", "V;PRS;3;SG") == "kaufen"


def test_orientation_examples():
    words = ["tala", "peki", "sopu", "kare", "miso"]
    assert detect_orientation([Triple(w, "X", "ge" + w) for w in words]) is Orientation.PREFIXING
    assert detect_orientation([Triple(w, "X", w + "s") for w in words]) is Orientation.SUFFIXING


def test_orientation_tie_defaults_to_suffixing():
    # by hand: each "zu"+w has one prefix change, each w+"n" one suffix change
    ts = [Triple(w, "X", "zu" + w) for w in ("tala", "peki", "sopo")]
    ts += [Triple(w, "X", w + "n") for w in ("tala", "peki", "sopo")]
    assert change_counts(ts) == (3, 3)
    assert detect_orientation(ts) is Orientation.SUFFIXING


def test_orientation_needs_data():
    with pytest.raises(ValueError):
        detect_orientation([])
    with pytest.raises(ValueError):
        train([])


def test_identity_training():
    ts = [Triple(w, "N;SG", w) for w in ("hund", "katze", "maus")]
    m = train(ts)
    assert all(r.pattern == r.replacement for r in m.store.suffix_rules["N;SG"])
    assert all(r.pattern == r.replacement for r in m.store.prefix_rules["N;SG"])
    assert inflect(m, "vogel", "N;SG") == "vogel"


def test_mirror_of_suffixing_language_is_prefixing_with_same_rules():
    ts = suffixing_language()
    forward = train(ts)
    mirrored = train(reverse_triples(ts))
    assert forward.orientation is Orientation.SUFFIXING
    assert mirrored.orientation is Orientation.PREFIXING
    assert mirrored.store == forward.store
    rng = random.Random(1)
    for _ in range(50):
        w = "".join(rng.choice("ptksaeiou") for _ in range(rng.randint(2, 7)))
        for b in ("N;PL", "V;PST", "ADJ"):
            assert inflect(mirrored, w[::-1], b) == inflect(forward, w, b)[::-1]


def test_prefixing_language_uses_reversal():
    tr, te = prefixing_language()
    m = train(tr)
    assert m.orientation is Orientation.PREFIXING
    assert all(m.inflect(t.lemma, t.bundle) == t.form for t in te)


def test_suffix_step_skipped_when_nothing_matches():
    m = train([Triple("laufen", "V;PST", "lief")])
    # only word-final rules ending in n exist; "xyz" matches none, prefix rule is $ -> $
    assert inflect(m, "xyz", "V;PST") == "xyz"


def test_prefix_rule_skipped_when_not_a_prefix():
    store = RuleStore()
    store.add("X", PrefixRule("un", ""), [SuffixRule("a", "as")])
    m = Model(store)
    assert inflect(m, "kala", "X") == "kalas"
    assert inflect(m, "unkala", "X") == "kalas"


def test_model_file_round_trip():
    tr, _ = prefixing_language(30, 0)
    m = train(tr)
    again = Model.loads(m.dumps())
    assert again.orientation is m.orientation and again.store == m.store
    assert m.dumps().startswith("#orientation\tprefixing\n")


def test_empty_lemma_rejected():
    with pytest.raises(ValueError):
        inflect(train([SCHIELEN]), "", "V")


lemmas = st.text(alphabet="abcdé ", min_size=1, max_size=8)


@settings(max_examples=300, deadline=None)
@given(lemmas, lemmas)
def test_single_example_round_trip(lemma, form):
    t = Triple(lemma, "V;X", form)
    assert inflect(train([t]), lemma, "V;X") == form


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(lemmas, lemmas), min_size=1, max_size=6), lemmas)
def test_copy_fallback_for_absent_bundle(pairs, query):
    m = train([Triple(a, "SEEN", b) for a, b in pairs])
    assert inflect(m, query, "UNSEEN") == query


def test_deterministic():
    ts = suffixing_language(40, 3)
    assert train(ts).dumps() == train(list(ts)).dumps()
