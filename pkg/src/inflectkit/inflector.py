"""The rule-based inflection model: orientation, training and generation."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .align import align, classify_changes, split_zones
from .core import FormatError, Triple, as_bundle
from .rules import RuleStore, extract_rules


class Orientation(str, enum.Enum):
    SUFFIXING = "suffixing"
    PREFIXING = "prefixing"


def change_counts(triples: Iterable[Triple]) -> tuple[int, int]:
    """(prefix-change count, suffix-change count) over unreversed triples."""
    pre = suf = 0
    for t in triples:
        changes = classify_changes(align(t.lemma, t.form))
        pre += changes.prefix
        suf += changes.suffix
    return pre, suf


def detect_orientation(triples: Sequence[Triple]) -> Orientation:
    if not triples:
        raise ValueError("cannot detect orientation from an empty training set")
    pre, suf = change_counts(triples)
    return Orientation.PREFIXING if pre > suf else Orientation.SUFFIXING


@dataclass
class Model:
    store: RuleStore
    orientation: Orientation = Orientation.SUFFIXING

    @property
    def reversed(self) -> bool:
        return self.orientation is Orientation.PREFIXING

    def inflect(self, lemma: str, bundle) -> str:
        if not lemma:
            raise ValueError("lemma must be non-empty")
        bundle = as_bundle(bundle)
        if bundle not in self.store:
            return lemma
        word = lemma[::-1] if self.reversed else lemma
        rule = self.store.best_suffix_rule(bundle, word)
        if rule is not None:
            word = rule.apply(word)
        prefix = self.store.best_prefix_rule(bundle)
        if prefix is not None and prefix.matches(word):
            word = prefix.apply(word)
        return word[::-1] if self.reversed else word

    # --- model file ------------------------------------------------------
    # First line ``#orientation<TAB>suffixing|prefixing``, then the sorted rule
    # dump.  Rules of a prefixing model are stored over reversed strings.

    def dumps(self) -> str:
        return f"#orientation\t{self.orientation.value}\n" + self.store.dumps()

    @classmethod
    def loads(cls, text: str) -> Model:
        head, _, rest = text.partition("\n")
        parts = head.split("\t")
        if len(parts) != 2 or parts[0] != "#orientation":
            raise FormatError("missing #orientation header", 1, head)
        try:
            orientation = Orientation(parts[1])
        except ValueError:
            raise FormatError("unknown orientation", 1, head) from None
        return cls(RuleStore.loads(rest, first_lineno=2), orientation)


def train(triples: Sequence[Triple], orientation: Orientation | None = None) -> Model:
    """Fit a model; ``orientation`` overrides the detected one when given."""
    triples = list(triples)
    if not triples:
        raise ValueError("cannot train on an empty set of triples")
    if orientation is None:
        orientation = detect_orientation(triples)
    orientation = Orientation(orientation)
    flip = orientation is Orientation.PREFIXING
    store = RuleStore()
    for t in triples:
        lemma, form = (t.lemma[::-1], t.form[::-1]) if flip else (t.lemma, t.form)
        prefix, suffixes = extract_rules(split_zones(align(lemma, form)))
        store.add(t.bundle, prefix, suffixes)
    return Model(store, orientation)


def inflect(model: Model, lemma: str, bundle) -> str:
    return model.inflect(lemma, bundle)
