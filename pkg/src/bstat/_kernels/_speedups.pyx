# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels for whole-group distribution sums.

Letters compare in the order -1 < -2 < ... < -n < 1 < ... < n; inside the
loops a letter x is mapped to the integer key (x if x > 0 else -x - n - 1),
which realizes that order under plain int comparison.
"""

from libc.stdlib cimport calloc, free, malloc


cdef bint _next_permutation(int* a, int n) noexcept nogil:
    cdef int i = n - 2
    cdef int j, tmp, lo, hi
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return 0
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    lo = i + 1
    hi = n - 1
    while lo < hi:
        tmp = a[lo]; a[lo] = a[hi]; a[hi] = tmp
        lo += 1
        hi -= 1
    return 1


def eulerian_counts(int n):
    """(des, maj) counts over all permutations of 1..n, as a dict."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > 16:
        raise ValueError(f"kernel limit exceeded: n={n}")
    cdef int cols = n * (n - 1) // 2 + 1
    cdef long long* counts = <long long*>calloc(n * cols, sizeof(long long))
    cdef int* a = <int*>malloc(n * sizeof(int))
    if counts == NULL or a == NULL:
        free(counts)
        free(a)
        raise MemoryError()
    cdef int i, d, m
    cdef bint more = 1
    for i in range(n):
        a[i] = i + 1
    try:
        with nogil:
            while more:
                d = 0
                m = 0
                for i in range(1, n):
                    if a[i - 1] > a[i]:
                        d += 1
                        m += i
                counts[d * cols + m] += 1
                more = _next_permutation(a, n)
        result = {}
        for d in range(n):
            for m in range(cols):
                if counts[d * cols + m]:
                    result[(d, m)] = counts[d * cols + m]
        return result
    finally:
        free(counts)
        free(a)


def signed_counts(int n):
    """((ndes, nmaj) counts, (fdes, fmaj) counts) over all signed words, as dicts."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > 16:
        raise ValueError(f"kernel limit exceeded: n={n}")
    cdef int rows = 2 * n            # both descent statistics are <= 2n - 1
    cdef int cols = n * n + 1        # both major statistics are <= n^2
    cdef long long* neg = <long long*>calloc(rows * cols, sizeof(long long))
    cdef long long* flag = <long long*>calloc(rows * cols, sizeof(long long))
    cdef int* a = <int*>malloc(n * sizeof(int))
    if neg == NULL or flag == NULL or a == NULL:
        free(neg)
        free(flag)
        free(a)
        raise MemoryError()
    cdef unsigned int mask
    cdef unsigned int mend = (<unsigned int>1) << n
    cdef int i, d, m, negc, negs, key, prev, first_neg
    cdef bint more = 1
    for i in range(n):
        a[i] = i + 1
    try:
        with nogil:
            while more:
                for mask in range(mend):
                    d = 0
                    m = 0
                    negc = 0
                    negs = 0
                    prev = 0
                    for i in range(n):
                        if (mask >> i) & 1:
                            key = a[i] - n - 1
                            negc += 1
                            negs += a[i]
                        else:
                            key = a[i]
                        if i > 0 and prev > key:
                            d += 1
                            m += i
                        prev = key
                    first_neg = <int>(mask & 1)
                    neg[(d + negc) * cols + m + negs] += 1
                    flag[(2 * d + first_neg) * cols + 2 * m + negc] += 1
                more = _next_permutation(a, n)
        neg_result = {}
        flag_result = {}
        for d in range(rows):
            for m in range(cols):
                if neg[d * cols + m]:
                    neg_result[(d, m)] = neg[d * cols + m]
                if flag[d * cols + m]:
                    flag_result[(d, m)] = flag[d * cols + m]
        return neg_result, flag_result
    finally:
        free(neg)
        free(flag)
        free(a)
