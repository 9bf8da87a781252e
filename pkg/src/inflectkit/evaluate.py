"""Scoring: exact-match accuracy, mean Levenshtein distance, full-paradigm
accuracy, and the ensemble / feature-combination oracles.

Strings are compared as-is, with no case folding or Unicode normalisation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import kernels
from .core import Paradigm, Triple


class AlignmentError(ValueError):
    """Gold and predicted items do not line up."""


def levenshtein(a: str, b: str) -> int:
    return kernels.levenshtein(a, b)


@dataclass(frozen=True)
class EvalReport:
    per_form_accuracy: float
    mean_levenshtein: float
    n_items: int
    full_paradigm_accuracy: Optional[float] = None

    def summary(self) -> str:
        s = f"accuracy={self.per_form_accuracy:.4f} lev={self.mean_levenshtein:.4f}"
        if self.full_paradigm_accuracy is not None:
            s += f" paradigm={self.full_paradigm_accuracy:.4f}"
        return s


def score_forms(pairs: Iterable[tuple[str, str]]) -> EvalReport:
    """Score ``(gold, predicted)`` pairs."""
    correct = 0
    dist = 0
    n = 0
    for gold, pred in pairs:
        n += 1
        if gold == pred:
            correct += 1
        else:
            dist += kernels.levenshtein(gold, pred)
    if n == 0:
        raise ValueError("nothing to score")
    return EvalReport(correct / n, dist / n, n)


def _check_same_item(g: Triple, p: Triple, index: int) -> None:
    if g.lemma != p.lemma or g.bundle.key != p.bundle.key:
        raise AlignmentError(
            f"item {index + 1}: gold ({g.lemma}, {g.bundle.key}) vs "
            f"prediction ({p.lemma}, {p.bundle.key})"
        )


def aligned_pairs(gold: Sequence[Triple], predicted: Sequence[Triple]) -> list[tuple[str, str]]:
    """Pair gold and predicted forms, checking lemma and bundle agree item by item."""
    for i, (g, p) in enumerate(zip(gold, predicted)):
        _check_same_item(g, p, i)
    if len(gold) != len(predicted):
        k = min(len(gold), len(predicted))
        which = "missing prediction for" if len(predicted) < len(gold) else "surplus prediction"
        item = gold[k] if len(predicted) < len(gold) else predicted[k]
        raise AlignmentError(f"item {k + 1}: {which} ({item.lemma}, {item.bundle.key})")
    return [(g.form, p.form) for g, p in zip(gold, predicted)]


def score_triples(gold: Sequence[Triple], predicted: Sequence[Triple]) -> EvalReport:
    return score_forms(aligned_pairs(gold, predicted))


def score_paradigms(gold: Sequence[Paradigm], predicted: Sequence[Paradigm],
                    inputs: Optional[Sequence[Paradigm]] = None) -> EvalReport:
    """Per-cell and whole-paradigm scores.

    With ``inputs`` (the masked paradigms the system saw), only cells that
    were unfilled there are scored; without it every cell is.  Paradigms with
    no scored cell are left out of the full-paradigm denominator.
    """
    if len(gold) != len(predicted) or (inputs is not None and len(inputs) != len(gold)):
        raise AlignmentError(
            f"{len(gold)} gold paradigms, {len(predicted)} predicted"
            + ("" if inputs is None else f", {len(inputs)} inputs")
        )
    pairs = []
    whole_right = whole_total = 0
    for k, (g, p) in enumerate(zip(gold, predicted)):
        given = inputs[k] if inputs is not None else None
        shapes = [g, p] + ([given] if given is not None else [])
        if len({x.lemma for x in shapes}) != 1 or len({tuple(b.key for b, _ in x.cells) for x in shapes}) != 1:
            raise AlignmentError(_shape_mismatch(k, g, p, given))
        scored = 0
        all_right = True
        for c, (bundle, gold_form) in enumerate(g.cells):
            if given is not None and given.cells[c][1] is not None:
                continue
            pred_form = p.cells[c][1]
            if gold_form is None or pred_form is None:
                raise AlignmentError(f"paradigm {g.lemma!r}: cell {bundle.key} lacks a gold or predicted form")
            pairs.append((gold_form, pred_form))
            scored += 1
            all_right &= gold_form == pred_form
        if scored:
            whole_total += 1
            whole_right += all_right
    report = score_forms(pairs)
    return EvalReport(report.per_form_accuracy, report.mean_levenshtein, report.n_items,
                      whole_right / whole_total)


def _shape_mismatch(k, g, p, given) -> str:
    for other in [p] + ([given] if given is not None else []):
        if other.lemma != g.lemma:
            return f"paradigm {k + 1}: lemma {g.lemma!r} vs {other.lemma!r}"
        gk = [b.key for b, _ in g.cells]
        ok = [b.key for b, _ in other.cells]
        for a, b in zip(gk, ok):
            if a != b:
                return f"paradigm {g.lemma!r}: cell {a} vs {b}"
        if len(gk) != len(ok):
            return f"paradigm {g.lemma!r}: {len(gk)} cells vs {len(ok)}"
    return f"paradigm {g.lemma!r}: shape mismatch"


def macro_average(reports: Sequence[EvalReport]) -> EvalReport:
    """Unweighted mean over languages."""
    if not reports:
        raise ValueError("no reports to average")
    n = len(reports)
    full = None
    if all(r.full_paradigm_accuracy is not None for r in reports):
        full = sum(r.full_paradigm_accuracy for r in reports) / n
    return EvalReport(
        sum(r.per_form_accuracy for r in reports) / n,
        sum(r.mean_levenshtein for r in reports) / n,
        sum(r.n_items for r in reports),
        full,
    )


def oracle_ensemble(systems: Sequence[Sequence[Triple]], gold: Sequence[Triple]) -> float:
    """Fraction of items that at least one system gets exactly right."""
    if not systems:
        raise ValueError("need at least one system")
    columns = [aligned_pairs(gold, s) for s in systems]
    if not gold:
        raise ValueError("nothing to score")
    hits = sum(any(col[i][0] == col[i][1] for col in columns) for i in range(len(gold)))
    return hits / len(gold)


def oracle_feature_combination(train: Iterable[Triple], test: Sequence[Triple]) -> float:
    """Fraction of test triples whose exact bundle occurs somewhere in training."""
    seen = {t.bundle.key for t in train}
    if not test:
        raise ValueError("nothing to score")
    return sum(t.bundle.key in seen for t in test) / len(test)
