"""Weighted edit alignment of a lemma with an inflected form.

Insertions and deletions cost 1.0 and substitutions 1.1, so a substitution
is only chosen over a delete/insert pair when it is strictly cheaper.  The
leading run of one-sided columns is the prefix zone; everything after it is
the core (stem plus suffix), from which suffix rules are read.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from . import kernels

GAP = None

Column = tuple[Optional[str], Optional[str]]


def _side(columns, k):
    return "".join(c[k] for c in columns if c[k] is not GAP)


def is_one_sided(col: Column) -> bool:
    return col[0] is GAP or col[1] is GAP


def is_substitution(col: Column) -> bool:
    return col[0] is not GAP and col[1] is not GAP and col[0] != col[1]


def column_cost(col: Column) -> int:
    """Cost of one column in tenths."""
    if col[0] is GAP:
        return kernels.INS_COST
    if col[1] is GAP:
        return kernels.DEL_COST
    return kernels.SUB_COST if col[0] != col[1] else 0


@dataclass(frozen=True)
class Alignment:
    columns: tuple[Column, ...]
    cost: Fraction

    def __post_init__(self):
        for col in self.columns:
            if col[0] is GAP and col[1] is GAP:
                raise ValueError("an alignment column cannot be a gap on both sides")

    @property
    def source(self) -> str:
        return _side(self.columns, 0)

    @property
    def target(self) -> str:
        return _side(self.columns, 1)

    def render(self, gap: str = "-") -> tuple[str, str]:
        """Two equal-length display rows, e.g. ``("--schielen", "geschielt-")``."""
        top = "".join(gap if a is GAP else a for a, _ in self.columns)
        bottom = "".join(gap if b is GAP else b for _, b in self.columns)
        return top, bottom


def align(lemma: str, form: str) -> Alignment:
    """Minimum-cost alignment of ``lemma`` with ``form``.

    Among equal-cost alignments the one whose edit script is earliest in the
    order match/substitute < delete < insert, compared left to right, wins.
    """
    if not lemma or not form:
        raise ValueError("align() needs two non-empty strings")
    ops, cost = kernels.align_ops(lemma, form)
    columns = []
    i = j = 0
    for op in ops:
        if op == "D":
            columns.append((lemma[i], GAP))
            i += 1
        elif op == "I":
            columns.append((GAP, form[j]))
            j += 1
        else:
            columns.append((lemma[i], form[j]))
            i += 1
            j += 1
    return Alignment(tuple(columns), Fraction(cost, 10))


@dataclass(frozen=True)
class ZoneSplit:
    prefix_pair: tuple[str, str]
    core_pair: tuple[str, str]
    core_columns: tuple[Column, ...]


def leading_gap_run(columns) -> int:
    n = 0
    for col in columns:
        if not is_one_sided(col):
            break
        n += 1
    return n


def trailing_gap_run(columns) -> int:
    n = 0
    for col in reversed(columns):
        if not is_one_sided(col):
            break
        n += 1
    return n


def split_zones(alignment: Alignment) -> ZoneSplit:
    cols = alignment.columns
    p = leading_gap_run(cols)
    prefix, core = cols[:p], cols[p:]
    return ZoneSplit(
        prefix_pair=(_side(prefix, 0), _side(prefix, 1)),
        core_pair=(_side(core, 0), _side(core, 1)),
        core_columns=tuple(core),
    )


class Changes(NamedTuple):
    """Which parts of the word changed between lemma and form."""

    prefix: bool
    suffix: bool
    internal: bool


def classify_changes(alignment: Alignment) -> Changes:
    """Prefix, suffix and stem-internal change flags for one alignment.

    A suffix change is a non-empty trailing run of one-sided columns, or a
    substitution in the last column before that run.  Any other non-matching
    column in the core counts as a stem-internal change.
    """
    z = split_zones(alignment)
    core = z.core_columns
    prefix = z.prefix_pair[0] != z.prefix_pair[1]
    t = trailing_gap_run(core)
    end = len(core) - t
    suffix = t > 0
    if end > 0 and is_substitution(core[end - 1]):
        suffix = True
        end -= 1
    internal = any(a != b for a, b in core[:end])
    return Changes(prefix, suffix, internal)
