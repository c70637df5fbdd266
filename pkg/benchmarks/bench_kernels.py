"""Time the counting kernels: compiled extension vs pure-Python fallback.

Usage::

    python3 benchmarks/bench_kernels.py [--max-n 7] [--repeat 3]

Reports the best of ``--repeat`` runs per backend and checks that both
backends produce identical counts.
"""

import argparse
import time

from bstat._kernels import pure

try:
    from bstat._kernels import _speedups
except ImportError:
    _speedups = None


def best_time(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def bench(kernel_name, sizes, repeat):
    print(f"\n{kernel_name}")
    print(f"{'n':>4} {'python':>12} {'cython':>12} {'speedup':>9}")
    for n in sizes:
        slow, expected = best_time(getattr(pure, kernel_name), n, repeat=repeat)
        if _speedups is None:
            print(f"{n:>4} {slow:>11.4f}s {'-':>12} {'-':>9}")
            continue
        fast, got = best_time(getattr(_speedups, kernel_name), n, repeat=repeat)
        if got != expected:
            raise SystemExit(f"{kernel_name}({n}): backends disagree")
        ratio = slow / fast if fast > 0 else float("inf")
        print(f"{n:>4} {slow:>11.4f}s {fast:>11.4f}s {ratio:>8.1f}x")


def main():
    parser = argparse.ArgumentParser(
        description="compare the counting kernel backends"
    )
    parser.add_argument(
        "--max-n", type=int, default=7, help="largest n for the signed-word kernel"
    )
    parser.add_argument("--repeat", type=int, default=3, help="runs per measurement")
    args = parser.parse_args()

    if _speedups is None:
        print("compiled kernel not built; timing the pure backend only")
    bench("eulerian_counts", range(5, min(args.max_n + 3, 11)), args.repeat)
    bench("signed_counts", range(3, args.max_n + 1), args.repeat)
    if _speedups is not None:
        print("\nbackends agree on every measured size")


if __name__ == "__main__":
    main()
