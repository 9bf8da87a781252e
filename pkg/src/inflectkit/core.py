"""Domain types and the tab-separated file format shared by every module.

A data line holds three tab-separated fields.  The released shared-task
files use the order ``lemma<TAB>form<TAB>tags``; ``ColumnOrder.LEMMA_TAGS_FORM``
selects the ``lemma<TAB>tags<TAB>form`` order instead.  Tags are joined with
``;`` and their order is significant.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

_FORBIDDEN = ("\t", "\n", "\r")


class FormatError(ValueError):
    """A line of a data file could not be parsed."""

    def __init__(self, message: str, lineno: Optional[int] = None, line: Optional[str] = None):
        self.lineno = lineno
        self.line = line
        if lineno is not None:
            message = f"line {lineno}: {message}: {line!r}"
        super().__init__(message)


class ColumnOrder(str, enum.Enum):
    LEMMA_FORM_TAGS = "lemma-form-tags"
    LEMMA_TAGS_FORM = "lemma-tags-form"


def _check_text(value: str, what: str) -> None:
    if not isinstance(value, str) or not value:
        raise ValueError(f"{what} must be a non-empty string")
    if any(c in value for c in _FORBIDDEN):
        raise ValueError(f"{what} may not contain tab or newline: {value!r}")


@dataclass(frozen=True, order=True)
class FeatureBundle:
    """An ordered, non-empty sequence of morphosyntactic tags."""

    tags: tuple[str, ...]

    def __post_init__(self):
        tags = tuple(self.tags)
        object.__setattr__(self, "tags", tags)
        if not tags:
            raise ValueError("a feature bundle needs at least one tag")
        for tag in tags:
            if not isinstance(tag, str) or not tag:
                raise ValueError(f"empty tag in bundle {tags!r}")
            if ";" in tag or any(c in tag for c in _FORBIDDEN):
                raise ValueError(f"illegal character in tag {tag!r}")

    @classmethod
    def parse(cls, key: str) -> FeatureBundle:
        return cls(tuple(key.split(";")))

    @property
    def key(self) -> str:
        return ";".join(self.tags)

    canonical_key = key

    def __str__(self):
        return self.key


def as_bundle(value) -> FeatureBundle:
    """Accept a bundle, a ``;``-joined key, or a tag sequence."""
    if isinstance(value, FeatureBundle):
        return value
    if isinstance(value, str):
        return FeatureBundle.parse(value)
    return FeatureBundle(tuple(value))


@dataclass(frozen=True)
class Triple:
    lemma: str
    bundle: FeatureBundle
    form: str

    def __post_init__(self):
        object.__setattr__(self, "bundle", as_bundle(self.bundle))
        _check_text(self.lemma, "lemma")
        _check_text(self.form, "form")


@dataclass(frozen=True)
class Paradigm:
    """A lemma and its cells; a cell whose form is ``None`` is unfilled."""

    lemma: str
    cells: tuple[tuple[FeatureBundle, Optional[str]], ...]

    def __post_init__(self):
        _check_text(self.lemma, "lemma")
        cells = tuple((as_bundle(b), f) for b, f in self.cells)
        object.__setattr__(self, "cells", cells)
        if not cells:
            raise ValueError(f"paradigm of {self.lemma!r} has no cells")
        seen = set()
        for bundle, form in cells:
            if bundle.key in seen:
                raise ValueError(f"duplicate cell {bundle.key} in paradigm of {self.lemma!r}")
            seen.add(bundle.key)
            if form is not None:
                _check_text(form, "form")

    @property
    def is_complete(self) -> bool:
        return all(form is not None for _, form in self.cells)

    def missing(self) -> list[FeatureBundle]:
        return [b for b, f in self.cells if f is None]

    def triples(self) -> list[Triple]:
        """The filled cells as triples, in cell order."""
        return [Triple(self.lemma, b, f) for b, f in self.cells if f is not None]

    def form(self, bundle) -> Optional[str]:
        key = as_bundle(bundle).key
        for b, f in self.cells:
            if b.key == key:
                return f
        raise KeyError(key)


class Condition(str, enum.Enum):
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    DEV = "dev"
    TEST = "test"


@dataclass(frozen=True)
class Dataset:
    """Either triples (sub-task 1) or paradigms (sub-task 2), never both."""

    condition: Condition
    triples: tuple[Triple, ...] = field(default=())
    paradigms: tuple[Paradigm, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "condition", Condition(self.condition))
        object.__setattr__(self, "triples", tuple(self.triples))
        object.__setattr__(self, "paradigms", tuple(self.paradigms))
        if self.triples and self.paradigms:
            raise ValueError("a dataset holds triples or paradigms, not both")

    def __len__(self):
        return len(self.paradigms) if self.paradigms else len(self.triples)


# --- reading and writing -------------------------------------------------


def _lines(text: str) -> Iterator[tuple[int, str]]:
    # str.splitlines() also breaks on U+2028 and friends, which may occur in forms.
    if text.startswith("\ufeff"):
        text = text[1:]
    for lineno, line in enumerate(text.split("\n"), 1):
        if line.endswith("\r"):
            line = line[:-1]
        yield lineno, line


def _fields(line: str, lineno: int, order: ColumnOrder, allow_empty_form: bool = False):
    parts = line.split("\t")
    if len(parts) != 3:
        raise FormatError(f"expected 3 tab-separated fields, got {len(parts)}", lineno, line)
    if order is ColumnOrder.LEMMA_FORM_TAGS:
        lemma, form, tags = parts
    else:
        lemma, tags, form = parts
    if not lemma or not tags or (not form and not allow_empty_form):
        raise FormatError("empty field", lineno, line)
    try:
        bundle = FeatureBundle.parse(tags)
    except ValueError as exc:
        raise FormatError(str(exc), lineno, line) from None
    return lemma, bundle, form


def parse_triples(text: str, column_order=ColumnOrder.LEMMA_FORM_TAGS) -> list[Triple]:
    order = ColumnOrder(column_order)
    out = []
    for lineno, line in _lines(text):
        if not line.strip():
            continue
        lemma, bundle, form = _fields(line, lineno, order)
        out.append(Triple(lemma, bundle, form))
    return out


def _format_line(lemma: str, form: str, key: str, order: ColumnOrder) -> str:
    if order is ColumnOrder.LEMMA_FORM_TAGS:
        return f"{lemma}\t{form}\t{key}\n"
    return f"{lemma}\t{key}\t{form}\n"


def serialize_triples(triples: Iterable[Triple], column_order=ColumnOrder.LEMMA_FORM_TAGS) -> str:
    order = ColumnOrder(column_order)
    return "".join(_format_line(t.lemma, t.form, t.bundle.key, order) for t in triples)


def parse_paradigms(text: str, column_order=ColumnOrder.LEMMA_FORM_TAGS) -> list[Paradigm]:
    """Group consecutive lines sharing a lemma into paradigms.

    An empty form field marks an unfilled cell.  A blank line or a change of
    lemma closes the current paradigm.
    """
    order = ColumnOrder(column_order)
    out: list[Paradigm] = []
    lemma = None
    cells: list = []
    seen: set = set()

    def close():
        if cells:
            out.append(Paradigm(lemma, tuple(cells)))

    for lineno, line in _lines(text):
        if not line.strip():
            close()
            lemma, cells, seen = None, [], set()
            continue
        this_lemma, bundle, form = _fields(line, lineno, order, allow_empty_form=True)
        if this_lemma != lemma:
            close()
            lemma, cells, seen = this_lemma, [], set()
        if bundle.key in seen:
            raise FormatError(f"duplicate cell {bundle.key} for lemma {lemma!r}", lineno, line)
        seen.add(bundle.key)
        cells.append((bundle, form or None))
    close()
    return out


def serialize_paradigms(paradigms: Iterable[Paradigm], column_order=ColumnOrder.LEMMA_FORM_TAGS) -> str:
    """Write paradigms one cell per line; unfilled cells get an empty form."""
    order = ColumnOrder(column_order)
    chunks = []
    previous = None
    for p in paradigms:
        if p.lemma == previous:
            chunks.append("\n")  # keeps same-lemma neighbours apart on re-read
        chunks.extend(_format_line(p.lemma, form or "", b.key, order) for b, form in p.cells)
        previous = p.lemma
    return "".join(chunks)


def flatten(paradigms: Sequence[Paradigm]) -> list[Triple]:
    out = []
    for p in paradigms:
        for bundle, form in p.cells:
            if form is None:
                raise ValueError(f"unfilled cell {bundle.key} in paradigm of {p.lemma!r}")
            out.append(Triple(p.lemma, bundle, form))
    return out
