"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--pairs 20000] [--train 10000]
"""

import argparse
import random
import time

from inflectkit import _kernels_py

try:
    from inflectkit import _kernels as _compiled
except ImportError:
    _compiled = None


def words(rng, n, lo=4, hi=14, alphabet="abcdefghijklmnopqrstuvwxyzäöü"):
    return ["".join(rng.choice(alphabet) for _ in range(rng.randint(lo, hi))) for _ in range(n)]


def bench(fn, pairs, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        for a, b in pairs:
            fn(a, b)
        best = min(best, time.perf_counter() - t)
    return best


def bench_training(n, rng):
    from inflectkit import kernels
    from inflectkit.core import Triple
    from inflectkit.inflector import train

    stems = words(rng, n)
    triples = [Triple(s, "V;PST", "ge" + s[:-1] + "t") for s in stems]
    out = {}
    saved = kernels.align_ops
    try:
        for backend, impl in (("compiled", _compiled), ("python", _kernels_py)):
            if impl is None:
                continue
            kernels.align_ops = impl.align_ops
            t = time.perf_counter()
            train(triples)
            out[backend] = time.perf_counter() - t
    finally:
        kernels.align_ops = saved
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=20000)
    ap.add_argument("--train", type=int, default=10000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    pairs = list(zip(words(rng, args.pairs), words(rng, args.pairs)))

    print(f"{'kernel':<14}{'python s':>10}{'compiled s':>12}{'speedup':>9}")
    for name in ("align_ops", "levenshtein"):
        py = bench(getattr(_kernels_py, name), pairs)
        if _compiled is None:
            print(f"{name:<14}{py:>10.3f}{'n/a':>12}{'':>9}")
            continue
        c = bench(getattr(_compiled, name), pairs)
        print(f"{name:<14}{py:>10.3f}{c:>12.3f}{py / c:>8.1f}x")

    times = bench_training(args.train, rng)
    if "compiled" in times:
        print(f"{'train':<14}{times['python']:>10.3f}{times['compiled']:>12.3f}"
              f"{times['python'] / times['compiled']:>8.1f}x")
    else:
        print(f"{'train':<14}{times['python']:>10.3f}{'n/a':>12}")


if __name__ == "__main__":
    main()
