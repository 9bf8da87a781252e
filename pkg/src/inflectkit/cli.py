"""Command-line interface.

Every failure exits non-zero and writes one ``error: code=... message`` line
to stderr.  Output files are written to a temporary name and renamed into
place only once the whole command has succeeded.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from contextlib import contextmanager
from pathlib import Path

from . import __version__
from .align import align, classify_changes
from .core import ColumnOrder, FeatureBundle, FormatError, Triple, parse_paradigms, parse_triples, \
    serialize_paradigms, serialize_triples
from .evaluate import AlignmentError, oracle_ensemble, oracle_feature_combination, score_paradigms, \
    score_triples
from .inflector import Model, train
from .paradigm import complete
from .sampler import Sizes, SplitSpec, TASK1_SIZES, TASK2_SIZES, count_tokens, make_task1_splits, \
    make_task2_splits

DEFAULT_SEED = 0


class CommandError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def read_text(path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CommandError("E_IO", f"{path}: {exc}") from None


@contextmanager
def _parsing(path):
    try:
        yield
    except FormatError as exc:
        raise CommandError("E_FORMAT", f"{path}: {exc}") from None


def load_triples(path, order) -> list[Triple]:
    with _parsing(path):
        return parse_triples(read_text(path), order)


def load_paradigms(path, order):
    with _parsing(path):
        return parse_paradigms(read_text(path), order)


def load_model(path) -> Model:
    with _parsing(path):
        return Model.loads(read_text(path))


class Outputs:
    """Collects output files and commits them together."""

    def __init__(self):
        self.pending: list[tuple[str, Path]] = []

    def write(self, path, text: str) -> None:
        if path is None or str(path) == "-":
            sys.stdout.write(text)
            return
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            self.discard()
            raise CommandError("E_IO", f"{path}: {exc}") from None
        self.pending.append((tmp, path))

    def commit(self) -> None:
        for tmp, path in self.pending:
            os.replace(tmp, path)
        self.pending.clear()

    def discard(self) -> None:
        for tmp, _ in self.pending:
            try:
                os.unlink(tmp)
            except OSError:
                pass
        self.pending.clear()


def _queries(path, order):
    """Two-column ``lemma<TAB>tags`` queries, or full triples whose form is ignored."""
    out = []
    for lineno, line in enumerate(read_text(path).split("\n"), 1):
        line = line.rstrip("\r")
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) == 2:
            lemma, tags = parts
        elif len(parts) == 3:
            lemma, tags = (parts[0], parts[2]) if order is ColumnOrder.LEMMA_FORM_TAGS else parts[:2]
        else:
            raise CommandError("E_FORMAT", f"{path}: {FormatError('expected lemma<TAB>tags', lineno, line)}")
        if not lemma or not tags:
            raise CommandError("E_FORMAT", f"{path}: {FormatError('empty field', lineno, line)}")
        try:
            out.append((lemma, FeatureBundle.parse(tags)))
        except ValueError as exc:
            raise CommandError("E_FORMAT", f"{path}: {FormatError(str(exc), lineno, line)}") from None
    return out


# --- commands --------------------------------------------------------------


def command_train(args, out: Outputs) -> None:
    triples = load_triples(args.input, args.column_order)
    if not triples:
        raise CommandError("E_EMPTY", f"{args.input}: no training triples")
    model = train(triples)
    out.write(args.model_out, model.dumps())
    print(f"triples={len(triples)} orientation={model.orientation.value}",
          file=sys.stderr if str(args.model_out) == "-" else sys.stdout)


def command_inflect(args, out: Outputs) -> None:
    model = load_model(args.model)
    lines = []
    for lemma, bundle in _queries(args.input, args.column_order):
        form = model.inflect(lemma, bundle)
        if args.column_order is ColumnOrder.LEMMA_FORM_TAGS:
            lines.append(f"{lemma}\t{form}\t{bundle.key}\n")
        else:
            lines.append(f"{lemma}\t{bundle.key}\t{form}\n")
    out.write(args.output, "".join(lines))


def command_complete(args, out: Outputs) -> None:
    model = load_model(args.model)
    paradigms = load_paradigms(args.input, args.column_order)
    out.write(args.output, serialize_paradigms([complete(model, p) for p in paradigms], args.column_order))


def command_sample(args, out: Outputs) -> None:
    sizes = args.sizes or (TASK1_SIZES if args.task == 1 else TASK2_SIZES)
    spec = SplitSpec(args.seed, sizes, args.keep_prob)
    order = args.column_order
    if args.task == 1:
        items = load_triples(args.input, order)
        forms = {t.form for t in items}
    else:
        items = load_paradigms(args.input, order)
        forms = {f for p in items for _, f in p.cells if f is not None}
    counts = {}
    if args.corpus:
        try:
            with open(args.corpus, encoding="utf-8") as fh:
                counts = count_tokens(fh, forms)
        except (OSError, UnicodeDecodeError) as exc:
            raise CommandError("E_IO", f"{args.corpus}: {exc}") from None
    try:
        splits = (make_task1_splits if args.task == 1 else make_task2_splits)(items, counts, spec)
    except ValueError as exc:
        raise CommandError("E_VALUE", str(exc)) from None

    base = Path(args.out_dir) / args.name
    for cond in ("low", "medium", "high"):
        if cond in splits.datasets:
            ds = splits.datasets[cond]
            text = (serialize_triples(ds.triples, order) if args.task == 1
                    else serialize_paradigms(ds.paradigms, order))
            out.write(f"{base}-train-{cond}", text)
    for cond in ("dev", "test"):
        ds = splits.datasets[cond]
        if args.task == 1:
            out.write(f"{base}-{cond}", serialize_triples(ds.triples, order))
        else:
            out.write(f"{base}-covered-{cond}", serialize_paradigms(ds.paradigms, order))
            out.write(f"{base}-uncovered-{cond}", serialize_paradigms(splits.gold[cond].paradigms, order))
    summary = " ".join(f"{c}={len(ds)}" for c, ds in splits.datasets.items())
    print(f"task={args.task} seed={args.seed} {summary}")


def command_evaluate(args, out: Outputs) -> None:
    try:
        if args.task == 1:
            report = score_triples(load_triples(args.gold, args.column_order),
                                   load_triples(args.pred, args.column_order))
        else:
            gold = load_paradigms(args.gold, args.column_order)
            pred = load_paradigms(args.pred, args.column_order)
            given = load_paradigms(args.covered, args.column_order) if args.covered else None
            report = score_paradigms(gold, pred, given)
    except AlignmentError as exc:
        raise CommandError("E_ALIGN", str(exc)) from None
    except ValueError as exc:
        raise CommandError("E_VALUE", str(exc)) from None
    lines = [
        f"items scored: {report.n_items}",
        f"exact-match accuracy: {100 * report.per_form_accuracy:.2f}%",
        f"mean Levenshtein distance: {report.mean_levenshtein:.2f}",
    ]
    if report.full_paradigm_accuracy is not None:
        lines.append(f"full-paradigm accuracy: {100 * report.full_paradigm_accuracy:.2f}%")
    lines.append(report.summary())
    out.write(args.output, "\n".join(lines) + "\n")


def command_oracle(args, out: Outputs) -> None:
    order = args.column_order
    try:
        if args.kind == "ensemble":
            gold = load_triples(args.gold, order)
            systems = [load_triples(p, order) for p in args.pred]
            text = f"oracle_e={oracle_ensemble(systems, gold):.4f}\n"
        else:
            value = oracle_feature_combination(load_triples(args.train, order), load_triples(args.test, order))
            text = f"oracle_fc={value:.4f}\n"
    except AlignmentError as exc:
        raise CommandError("E_ALIGN", str(exc)) from None
    except ValueError as exc:
        raise CommandError("E_VALUE", str(exc)) from None
    out.write(args.output, text)


def change_stats(triples) -> tuple[float, float, float]:
    """Percentages of triples with prefix, suffix and stem-internal changes."""
    pr = su = ap = 0
    for t in triples:
        ch = classify_changes(align(t.lemma, t.form))
        pr += ch.prefix
        su += ch.suffix
        ap += ch.internal
    n = len(triples)
    return 100 * pr / n, 100 * su / n, 100 * ap / n


def command_stats(args, out: Outputs) -> None:
    rows = ["dataset\tn\tPr\tSu\tAp"]
    for path in args.inputs:
        triples = load_triples(path, args.column_order)
        if not triples:
            raise CommandError("E_EMPTY", f"{path}: no triples")
        pr, su, ap = change_stats(triples)
        rows.append(f"{path}\t{len(triples)}\t{pr:.2f}\t{su:.2f}\t{ap:.2f}")
    out.write(args.output, "\n".join(rows) + "\n")


# --- argument parsing ------------------------------------------------------


def _sizes(text: str) -> Sizes:
    try:
        return Sizes.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _unit(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError("must lie in [0, 1]")
    return value


def _add_common(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
    # SUPPRESS so a flag given after the subcommand does not clobber one given before it.
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                   help=f"random seed (default {DEFAULT_SEED})")
    p.add_argument("--column-order", type=ColumnOrder, default=argparse.SUPPRESS,
                   choices=list(ColumnOrder), metavar="{lemma-form-tags,lemma-tags-form}",
                   help="TSV column order (default lemma-form-tags)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _add_common(argparse.ArgumentParser(
        prog="inflectkit", description="Rule-based inflection baseline and shared-task tooling."))
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.set_defaults(seed=DEFAULT_SEED, column_order=ColumnOrder.LEMMA_FORM_TAGS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = _add_common(sub.add_parser("train", help="learn a rule model from triples"))
    p.add_argument("--input", required=True)
    p.add_argument("--model-out", required=True)
    p.set_defaults(func=command_train)

    p = _add_common(sub.add_parser("inflect", help="inflect lemma<TAB>tags queries"))
    p.add_argument("--model", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--output", default="-")
    p.set_defaults(func=command_inflect)

    p = _add_common(sub.add_parser("complete", help="fill the empty cells of paradigms"))
    p.add_argument("--model", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--output", default="-")
    p.set_defaults(func=command_complete)

    p = _add_common(sub.add_parser("sample", help="build frequency-weighted splits"))
    p.add_argument("--task", type=int, choices=(1, 2), default=1)
    p.add_argument("--input", required=True)
    p.add_argument("--corpus", help="plain-text corpus for token counts (omit for uniform weights)")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--name", default="data", help="file name prefix")
    p.add_argument("--sizes", type=_sizes, help="low,medium,high,dev,test")
    p.add_argument("--keep-prob", type=_unit, default=0.2)
    p.set_defaults(func=command_sample)

    p = _add_common(sub.add_parser("evaluate", help="score predictions against gold"))
    p.add_argument("--task", type=int, choices=(1, 2), default=1)
    p.add_argument("--gold", required=True)
    p.add_argument("--pred", required=True)
    p.add_argument("--covered", help="task 2: the masked input, so only predicted cells are scored")
    p.add_argument("--output", default="-")
    p.set_defaults(func=command_evaluate)

    p = _add_common(sub.add_parser("oracle", help="oracle upper bounds"))
    osub = p.add_subparsers(dest="kind", required=True)
    q = _add_common(osub.add_parser("ensemble", help="correct if any system is correct"))
    q.add_argument("--gold", required=True)
    q.add_argument("pred", nargs="+")
    q.add_argument("--output", default="-")
    q = _add_common(osub.add_parser("fc", help="correct iff the bundle was seen in training"))
    q.add_argument("--train", required=True)
    q.add_argument("--test", required=True)
    q.add_argument("--output", default="-")
    p.set_defaults(func=command_oracle)

    p = _add_common(sub.add_parser("stats", help="prefix/suffix/stem-internal change percentages"))
    p.add_argument("inputs", nargs="+")
    p.add_argument("--output", default="-")
    p.set_defaults(func=command_stats)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = Outputs()
    try:
        args.func(args, out)
        out.commit()
    except CommandError as exc:
        out.discard()
        print(f"error: code={exc.code} {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        out.discard()
        print(f"error: code=E_FAIL {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
