"""Permutation inversion counting with a merge sort kernel."""

from __future__ import annotations

import numba
import numpy as np


@numba.njit(cache=True)
def _merge_count(a: np.ndarray) -> int:
    # Bottom-up merge sort; a and its scratch buffer are clobbered.
    n = a.shape[0]
    src = a
    dst = np.empty_like(a)
    count = np.int64(0)
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i = lo
            j = mid
            k = lo
            while i < mid and j < hi:
                if src[i] <= src[j]:
                    dst[k] = src[i]
                    i += 1
                else:
                    dst[k] = src[j]
                    j += 1
                    count += mid - i
                k += 1
            while i < mid:
                dst[k] = src[i]
                i += 1
                k += 1
            while j < hi:
                dst[k] = src[j]
                j += 1
                k += 1
        src, dst = dst, src
        width *= 2
    return count


def count_inversions(p) -> int:
    """Number of pairs ``i < j`` with ``p[i] > p[j]``.

    Works on any integer sequence, not only permutations: equal values never
    count as an inversion. The input is copied, never modified.

    >>> count_inversions([3, 4, 2, 1])
    5
    """
    a = np.array(p, dtype=np.int64)
    if a.ndim != 1:
        raise ValueError("expected a one-dimensional sequence")
    if a.shape[0] < 2:
        return 0
    return int(_merge_count(a))
