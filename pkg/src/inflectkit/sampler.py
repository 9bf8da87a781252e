"""Frequency-weighted train/dev/test construction.

Every random decision comes from one ``random.Random(seed)`` generator
(Python's Mersenne Twister), consumed in a fixed order: the weighted draw
first, then the dev/test shuffle, then (sub-task 2 only) one coin flip per
dev cell followed by one per test cell.
"""

from __future__ import annotations

import random
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .core import Condition, Dataset, Paradigm, Triple

CountTable = dict  # form -> corpus token count


def _strip_punct(token: str) -> str:
    start, end = 0, len(token)
    while start < end and unicodedata.category(token[start]).startswith("P"):
        start += 1
    while end > start and unicodedata.category(token[end - 1]).startswith("P"):
        end -= 1
    return token[start:end]


def tokenize(text: str) -> list[str]:
    """Split on whitespace and strip leading/trailing punctuation.

    Tokens that are pure punctuation vanish.
    """
    out = []
    for raw in text.split():
        tok = _strip_punct(raw)
        if tok:
            out.append(tok)
    return out


def count_tokens(corpus: Union[str, Iterable[str]], targets: Iterable[str]) -> CountTable:
    """Occurrences of each target form in the corpus token stream.

    Matching is case-sensitive string equality.  A multiword target counts
    occurrences of its token sequence; the stream runs across line breaks.
    """
    if isinstance(corpus, str):
        corpus = [corpus]
    wanted: dict[tuple[str, ...], list[str]] = {}
    for target in set(targets):
        wanted.setdefault(tuple(tokenize(target)), []).append(target)
    lengths = sorted({len(k) for k in wanted if len(k) > 1})
    longest = lengths[-1] if lengths else 1

    singles: Counter = Counter()
    multi: Counter = Counter()
    window: list[str] = []
    for chunk in corpus:
        for tok in tokenize(chunk):
            singles[tok] += 1
            if not lengths:
                continue
            window.append(tok)
            if len(window) > longest:
                del window[0]
            for n in lengths:
                if len(window) >= n:
                    key = tuple(window[-n:])
                    if key in wanted:
                        multi[key] += 1

    counts: CountTable = {}
    for key, names in wanted.items():
        if len(key) == 1:
            c = singles[key[0]]
        elif len(key) == 0:
            c = 0
        else:
            c = multi[key]
        for name in names:
            counts[name] = c
    return counts


def item_count(item: Union[Triple, Paradigm], counts: CountTable) -> int:
    """Corpus count of a triple's form, or the summed counts of a paradigm's distinct forms."""
    if isinstance(item, Paradigm):
        forms = {f for _, f in item.cells if f is not None}
        return sum(counts.get(f, 0) for f in forms)
    return counts.get(item.form, 0)


def laplace_weights(items: Sequence, counts: CountTable) -> list[int]:
    """Add-one smoothed counts; proportional to the unigram distribution."""
    if not items:
        raise ValueError("no items to weight")
    return [item_count(it, counts) + 1 for it in items]


def unigram_distribution(items: Sequence, counts: CountTable) -> list[float]:
    weights = laplace_weights(items, counts)
    total = sum(weights)
    return [w / total for w in weights]


class _Fenwick:
    def __init__(self, weights):
        self.n = len(weights)
        self.weights = list(weights)
        self.tree = [0] * (self.n + 1)
        for i, w in enumerate(self.weights, 1):
            self.tree[i] += w
            parent = i + (i & -i)
            if parent <= self.n:
                self.tree[parent] += self.tree[i]
        self.total = sum(self.weights)
        self.top = 1 << (self.n.bit_length() - 1) if self.n else 0

    def remove(self, idx):
        w = self.weights[idx]
        self.weights[idx] = 0
        self.total -= w
        i = idx + 1
        while i <= self.n:
            self.tree[i] -= w
            i += i & -i

    def find(self, u):
        """Smallest index whose inclusive prefix sum exceeds ``u``."""
        pos = 0
        step = self.top
        while step:
            nxt = pos + step
            if nxt <= self.n and self.tree[nxt] <= u:
                pos = nxt
                u -= self.tree[nxt]
            step >>= 1
        return pos


def sample_without_replacement(items: Sequence, weights: Sequence, n: int,
                               seed: Union[int, random.Random] = 0) -> list:
    """Draw ``n`` items one at a time, each proportionally to the remaining weights.

    ``weights`` need not be normalised.  With integer weights the draw is
    exact (``randrange`` over the remaining total); otherwise ``random()`` is
    scaled by the remaining total.  Returned in draw order.
    """
    if len(items) != len(weights):
        raise ValueError("items and weights differ in length")
    if n > len(items):
        raise ValueError(f"cannot draw {n} items from {len(items)}")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be non-negative")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    exact = all(isinstance(w, int) for w in weights)
    tree = _Fenwick(weights)
    out = []
    for _ in range(n):
        if tree.total <= 0:
            raise ValueError("remaining items all have zero weight")
        if exact:
            idx = tree.find(rng.randrange(tree.total))
        else:
            idx = tree.find(rng.random() * tree.total)
            if idx >= tree.n or tree.weights[idx] <= 0:
                # rounding pushed past the last live item
                idx = max(i for i, w in enumerate(tree.weights) if w > 0)
        out.append(items[idx])
        tree.remove(idx)
    return out


@dataclass(frozen=True)
class Sizes:
    low: int
    medium: int
    high: int
    dev: int
    test: int

    def __post_init__(self):
        if min(self.low, self.medium, self.high, self.dev, self.test) < 0:
            raise ValueError("split sizes must be non-negative")
        if not self.low <= self.medium <= self.high:
            raise ValueError("need low <= medium <= high")

    @classmethod
    def parse(cls, text: str) -> Sizes:
        parts = [int(p) for p in text.split(",")]
        if len(parts) != 5:
            raise ValueError("sizes are five comma-separated integers: low,medium,high,dev,test")
        return cls(*parts)


TASK1_SIZES = Sizes(100, 1000, 10000, 1000, 1000)
TASK2_SIZES = Sizes(10, 50, 200, 50, 50)


@dataclass(frozen=True)
class SplitSpec:
    seed: int = 0
    sizes: Sizes = TASK1_SIZES
    keep_probability: float = 0.2

    def __post_init__(self):
        if not 0.0 <= self.keep_probability <= 1.0:
            raise ValueError("keep_probability must lie in [0, 1]")

    @classmethod
    def task1(cls, seed: int = 0) -> SplitSpec:
        return cls(seed, TASK1_SIZES)

    @classmethod
    def task2(cls, seed: int = 0, keep_probability: float = 0.2) -> SplitSpec:
        return cls(seed, TASK2_SIZES, keep_probability)


@dataclass
class Splits:
    """Split datasets by condition; omitted conditions are simply absent.

    For sub-task 2, ``datasets["dev"]``/``["test"]`` hold the masked inputs
    and ``gold`` the same paradigms fully filled.
    """

    datasets: dict[str, Dataset]
    gold: dict[str, Dataset] = field(default_factory=dict)

    def __getitem__(self, condition) -> Dataset:
        return self.datasets[Condition(condition).value]

    def __contains__(self, condition) -> bool:
        return Condition(condition).value in self.datasets


def plan_sizes(available: int, sizes: Sizes) -> tuple[int, int, Optional[int], Optional[int], int, int]:
    """(draw, low, medium, high, dev, test) for ``available`` items.

    When there is not enough for the full high split, dev and test keep their
    size if that leaves at least ``low`` items for training, otherwise both
    shrink equally; high becomes everything left over if that is more than
    medium, and medium is dropped if the pool is smaller than it.
    """
    full = sizes.high + sizes.dev + sizes.test
    if available >= full:
        return full, sizes.low, sizes.medium, sizes.high, sizes.dev, sizes.test
    dev, test = sizes.dev, sizes.test
    if available - dev - test < sizes.low:
        dev = test = (available - sizes.low) // 2
        if dev < 1:
            raise ValueError(
                f"{available} items cannot fill a low split of {sizes.low} plus non-empty dev and test"
            )
    pool = available - dev - test
    medium = sizes.medium if pool >= sizes.medium else None
    high = pool if pool > sizes.medium else None
    return available, sizes.low, medium, high, dev, test


def _draw(items, counts, spec: SplitSpec, rng: random.Random):
    draw, low, medium, high, dev, test = plan_sizes(len(items), spec.sizes)
    order = sample_without_replacement(items, laplace_weights(items, counts), draw, rng)
    pool = draw - dev - test
    train = {Condition.LOW: order[:low]}
    if medium is not None:
        train[Condition.MEDIUM] = order[:medium]
    if high is not None:
        train[Condition.HIGH] = order[:high]
    held = order[pool:]
    rng.shuffle(held)
    return train, held[:dev], held[dev:dev + test]


def make_task1_splits(triples: Sequence[Triple], counts: CountTable, spec: SplitSpec = SplitSpec()) -> Splits:
    rng = random.Random(spec.seed)
    train, dev, test = _draw(list(triples), counts, spec, rng)
    out = {c.value: Dataset(c, triples=ts) for c, ts in train.items()}
    out["dev"] = Dataset(Condition.DEV, triples=dev)
    out["test"] = Dataset(Condition.TEST, triples=test)
    return Splits(out)


def mask_paradigm(paradigm: Paradigm, keep_probability: float, rng: random.Random) -> Paradigm:
    """Keep each cell as input with probability ``keep_probability``."""
    cells = tuple((b, f if rng.random() < keep_probability else None) for b, f in paradigm.cells)
    return Paradigm(paradigm.lemma, cells)


def make_task2_splits(paradigms: Sequence[Paradigm], counts: CountTable,
                      spec: SplitSpec = SplitSpec.task2()) -> Splits:
    paradigms = list(paradigms)
    for p in paradigms:
        if not p.is_complete:
            raise ValueError(f"source paradigm of {p.lemma!r} has unfilled cells")
    rng = random.Random(spec.seed)
    train, dev, test = _draw(paradigms, counts, spec, rng)
    out = {c.value: Dataset(c, paradigms=ps) for c, ps in train.items()}
    masked_dev = [mask_paradigm(p, spec.keep_probability, rng) for p in dev]
    masked_test = [mask_paradigm(p, spec.keep_probability, rng) for p in test]
    out["dev"] = Dataset(Condition.DEV, paradigms=masked_dev)
    out["test"] = Dataset(Condition.TEST, paradigms=masked_test)
    gold = {
        "dev": Dataset(Condition.DEV, paradigms=dev),
        "test": Dataset(Condition.TEST, paradigms=test),
    }
    return Splits(out, gold)
