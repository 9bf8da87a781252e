"""Anchored rewrite rules and the per-bundle rule store.

Rules keep their anchor implicitly: a :class:`SuffixRule` always applies at
the end of a word and a :class:`PrefixRule` at its start, so a literal ``$``
inside a word is just another character.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .align import GAP, ZoneSplit
from .core import FeatureBundle, FormatError, as_bundle


@dataclass(frozen=True, order=True)
class SuffixRule:
    pattern: str
    replacement: str

    def matches(self, word: str) -> bool:
        return word.endswith(self.pattern)

    def apply(self, word: str) -> str:
        return word[: len(word) - len(self.pattern)] + self.replacement

    def __str__(self):
        return f"{self.pattern}$ → {self.replacement}$"


@dataclass(frozen=True, order=True)
class PrefixRule:
    pattern: str
    replacement: str

    def matches(self, word: str) -> bool:
        return word.startswith(self.pattern)

    def apply(self, word: str) -> str:
        return self.replacement + word[len(self.pattern):]

    def __str__(self):
        return f"${self.pattern} → ${self.replacement}"


def extract_rules(zones: ZoneSplit) -> tuple[PrefixRule, list[SuffixRule]]:
    """One prefix rule from the prefix zone, one suffix rule per core column.

    The suffix rule for column ``i`` rewrites the input symbols of columns
    ``i..end`` into the output symbols of the same columns.
    """
    prefix = PrefixRule(*zones.prefix_pair)
    cols = zones.core_columns
    if not cols:
        return prefix, [SuffixRule("", "")]
    suffixes = []
    src: list[str] = []
    tgt: list[str] = []
    for a, b in reversed(cols):
        if a is not GAP:
            src.append(a)
        if b is not GAP:
            tgt.append(b)
        suffixes.append(SuffixRule("".join(reversed(src)), "".join(reversed(tgt))))
    suffixes.reverse()
    return prefix, suffixes


class RuleStore:
    """Rule counts keyed by the exact bundle key.

    Built by a single writer during training and read-only afterwards.
    """

    def __init__(self):
        self.suffix_rules: dict[str, Counter] = {}
        self.prefix_rules: dict[str, Counter] = {}

    def add(self, bundle, prefix_rule: PrefixRule, suffix_rules: Iterable[SuffixRule]) -> RuleStore:
        key = as_bundle(bundle).key
        self.prefix_rules.setdefault(key, Counter())[prefix_rule] += 1
        self.suffix_rules.setdefault(key, Counter()).update(suffix_rules)
        return self

    def __contains__(self, bundle) -> bool:
        key = as_bundle(bundle).key
        return key in self.suffix_rules or key in self.prefix_rules

    def __eq__(self, other):
        if not isinstance(other, RuleStore):
            return NotImplemented
        return self.suffix_rules == other.suffix_rules and self.prefix_rules == other.prefix_rules

    def bundles(self) -> list[str]:
        return sorted(set(self.suffix_rules) | set(self.prefix_rules))

    def suffix_count(self, bundle, rule: SuffixRule) -> int:
        return self.suffix_rules.get(as_bundle(bundle).key, Counter())[rule]

    def prefix_count(self, bundle, rule: PrefixRule) -> int:
        return self.prefix_rules.get(as_bundle(bundle).key, Counter())[rule]

    def best_suffix_rule(self, bundle, word: str) -> Optional[SuffixRule]:
        """Longest matching pattern, then highest count, then smallest rule."""
        if not word:
            raise ValueError("word must be non-empty")
        rules = self.suffix_rules.get(as_bundle(bundle).key)
        if not rules:
            return None
        best = None
        best_key = None
        for rule, count in rules.items():
            if not rule.matches(word):
                continue
            key = (-len(rule.pattern), -count, rule.pattern, rule.replacement)
            if best_key is None or key < best_key:
                best, best_key = rule, key
        return best

    def best_prefix_rule(self, bundle) -> Optional[PrefixRule]:
        """Most frequent prefix rule, whatever the word; ties go to the smallest rule."""
        rules = self.prefix_rules.get(as_bundle(bundle).key)
        if not rules:
            return None
        return min(rules.items(), key=lambda rc: (-rc[1], rc[0].pattern, rc[0].replacement))[0]

    # --- text dump -------------------------------------------------------

    def dump_lines(self) -> list[str]:
        """``bundle<TAB>S|P<TAB>pattern<TAB>replacement<TAB>count`` lines, sorted."""
        rows = []
        for key, rules in self.suffix_rules.items():
            rows.extend((key, "S", r.pattern, r.replacement, c) for r, c in rules.items())
        for key, rules in self.prefix_rules.items():
            rows.extend((key, "P", r.pattern, r.replacement, c) for r, c in rules.items())
        rows.sort()
        return [f"{k}\t{kind}\t{p}\t{r}\t{c}\n" for k, kind, p, r, c in rows]

    def dumps(self) -> str:
        return "".join(self.dump_lines())

    @classmethod
    def loads(cls, text: str, first_lineno: int = 1) -> RuleStore:
        store = cls()
        for lineno, line in enumerate(text.split("\n"), first_lineno):
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 5 or parts[1] not in ("S", "P"):
                raise FormatError("bad rule line", lineno, line)
            key, kind, pattern, replacement, count = parts
            try:
                key = FeatureBundle.parse(key).key
                n = int(count)
            except ValueError as exc:
                raise FormatError(str(exc), lineno, line) from None
            if n <= 0:
                raise FormatError("rule count must be positive", lineno, line)
            table = store.suffix_rules if kind == "S" else store.prefix_rules
            rule = SuffixRule(pattern, replacement) if kind == "S" else PrefixRule(pattern, replacement)
            table.setdefault(key, Counter())[rule] += n
        return store


def add_example(store: RuleStore, bundle, rules: tuple[PrefixRule, list[SuffixRule]]) -> RuleStore:
    prefix, suffixes = rules
    return store.add(bundle, prefix, suffixes)


def best_suffix_rule(store: RuleStore, bundle, word: str) -> Optional[SuffixRule]:
    return store.best_suffix_rule(bundle, word)


def best_prefix_rule(store: RuleStore, bundle) -> Optional[PrefixRule]:
    return store.best_prefix_rule(bundle)
