"""Pure-Python counting kernels (fallback when the compiled extension is absent).

Same contract as the compiled module: joint-distribution counts as dicts
mapping exponent pairs to the number of words attaining them.
"""

from __future__ import annotations

from itertools import permutations

from .. import statistics


def eulerian_counts(n: int) -> dict[tuple[int, int], int]:
    """(des, maj) counts over all permutations of 1..n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    counts: dict[tuple[int, int], int] = {}
    for u in permutations(range(1, n + 1)):
        d = m = 0
        for i in range(1, n):
            if u[i - 1] > u[i]:
                d += 1
                m += i
        key = (d, m)
        counts[key] = counts.get(key, 0) + 1
    return counts


def signed_counts(n: int) -> tuple[dict[tuple[int, int], int], dict[tuple[int, int], int]]:
    """((ndes, nmaj) counts, (fdes, fmaj) counts) over all signed words of length n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    neg: dict[tuple[int, int], int] = {}
    flag: dict[tuple[int, int], int] = {}
    for u in permutations(range(1, n + 1)):
        for mask in range(1 << n):
            w = tuple(-x if mask >> i & 1 else x for i, x in enumerate(u))
            key = (statistics.ndes(w), statistics.nmaj(w))
            neg[key] = neg.get(key, 0) + 1
            key = (statistics.fdes(w), statistics.fmaj(w))
            flag[key] = flag.get(key, 0) + 1
    return neg, flag
