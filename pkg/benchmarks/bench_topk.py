"""Compare the compiled Top-K kernel with the numpy fallback.

Usage: python benchmarks/bench_topk.py [--repeat N] [--ratio R]
"""

import argparse
import timeit

import numpy as np

from adaptopk import _kernels

SIZES = (785, 7_850, 25_450, 100_000, 1_000_000, 10_000_000)


def best_time(fn, v, k, repeat):
    number = max(1, int(2e6 // v.size))
    return min(timeit.repeat(lambda: fn(v, k), number=number, repeat=repeat)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--ratio", type=float, default=128.0, help="d/k")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    compiled = _kernels.compiled_topk_indices
    if compiled is None:
        print("compiled extension not built; timing the numpy fallback only")
    rng = np.random.default_rng(args.seed)
    print(f"{'d':>10} {'k':>8} {'compiled ms':>12} {'python ms':>10} {'speedup':>8}")
    for d in SIZES:
        v = rng.standard_normal(d)
        k = max(1, int(d / args.ratio + 0.5))
        py = best_time(_kernels.python_topk_indices, v, k, args.repeat)
        if compiled is None:
            print(f"{d:>10} {k:>8} {'-':>12} {1e3 * py:>10.4f} {'-':>8}")
            continue
        if not np.array_equal(compiled(v, k), _kernels.python_topk_indices(v, k)):
            raise SystemExit(f"backends disagree at d={d}")
        c = best_time(compiled, v, k, args.repeat)
        print(f"{d:>10} {k:>8} {1e3 * c:>12.4f} {1e3 * py:>10.4f} {py / c:>7.2f}x")


if __name__ == "__main__":
    main()
