"""Kendall tau sequence distance.

The distance between two sequences holding the same multiset of elements is
the minimum number of adjacent swaps turning one into the other. Both
routes below build the index permutation ``P`` that sends the k-th copy of
each element in ``s1`` to the k-th copy in ``s2``; the distance is the
inversion count of ``P``.

* :func:`tau_seq_sort` labels elements through a sorted copy of ``s1`` and
  binary search. Needs mutually orderable elements.
* :func:`tau_seq_hash` labels elements through a dict in first-occurrence
  order. Needs hashable elements. Usually the faster of the two.

Floats are keyed by their IEEE-754 bit pattern, so ``nan`` equals itself
and ``0.0`` differs from ``-0.0``.
"""

from __future__ import annotations

from bisect import bisect_left
from functools import partial

import numpy as np

from .errors import CountMismatch, ElementNotShared, LengthMismatch
from .inversions import count_inversions

__all__ = [
    "relabel_by_hash",
    "relabel_by_sort",
    "tau_seq",
    "tau_seq_hash",
    "tau_seq_sort",
]


def _float_bits(values) -> list[int]:
    return np.asarray(values, dtype=np.float64).view(np.int64).tolist()


def _as_list(seq) -> tuple[list, str]:
    """Return ``(elements, kind)`` where kind is 'float', 'mixed' or 'plain'."""
    if isinstance(seq, np.ndarray):
        if seq.ndim != 1:
            raise ValueError("sequences must be one-dimensional")
        if seq.dtype.kind == "f":
            return seq.tolist(), "float"
        if seq.dtype.kind != "O":
            return seq.tolist(), "plain"
    if isinstance(seq, str):
        return list(seq), "plain"
    items = list(seq)
    n_float = sum(1 for x in items if isinstance(x, (float, np.floating)))
    if n_float == 0:
        return items, "plain"
    if n_float == len(items):
        return items, "float"
    return items, "mixed"


def _keys(s1, s2) -> tuple[list, list, list, list]:
    """Canonical hashable/orderable keys for both sequences plus originals."""
    a, kind1 = _as_list(s1)
    b, kind2 = _as_list(s2)
    if kind1 == "plain" and kind2 == "plain":
        return a, b, a, b
    if kind1 == "float" and kind2 == "float":
        return _float_bits(a), _float_bits(b), a, b
    if len(a) == 0 or len(b) == 0:
        return a, b, a, b

    # Floats mixed with other element types: tag every key so a float's bit
    # pattern never equals an int, while keys stay mutually orderable.
    def wrap(items):
        return [(1, _float_bits([x])[0]) if isinstance(x, (float, np.floating))
                else (0, x) for x in items]
    return wrap(a), wrap(b), a, b


def _match_buckets(lab1: list[int], lab2: list[int], n_labels: int,
                   names1: list, names2: list) -> np.ndarray:
    """Pair the k-th occurrence of each label in ``lab1`` with the k-th in ``lab2``.

    A stable sort by label lays out the FIFO buckets back to back, so the
    concatenated buckets of both sides line up entry for entry.
    """
    l1 = np.asarray(lab1, dtype=np.intp)
    l2 = np.asarray(lab2, dtype=np.intp)
    c1 = np.bincount(l1, minlength=n_labels)
    c2 = np.bincount(l2, minlength=n_labels)
    bad = np.flatnonzero(c1 != c2)
    if bad.size:
        # labels absent from s1 only arise on the dense-label fast path
        unshared = np.flatnonzero(c1[l2] == 0)
        if unshared.size:
            raise ElementNotShared(names2[int(unshared[0])])
        label = int(bad[0])
        element = names1[int(np.flatnonzero(l1 == label)[0])]
        raise CountMismatch(element, int(c1[label]), int(c2[label]))
    p = np.empty(l1.shape[0], dtype=np.intp)
    p[np.argsort(l1, kind="stable")] = np.argsort(l2, kind="stable")
    return p


def _check_lengths(s1, s2) -> None:
    if len(s1) != len(s2):
        raise LengthMismatch(len(s1), len(s2))


def relabel_by_sort(s1, s2) -> np.ndarray:
    """Index permutation ``P`` with ``P[h1] = h2``, labels found by binary search.

    >>> relabel_by_sort("abacada", "bcaaaad").tolist()
    [2, 0, 3, 1, 4, 6, 5]
    """
    _check_lengths(s1, s2)
    k1, k2, a, b = _keys(s1, s2)
    n = len(k1)
    if n == 0:
        return np.empty(0, dtype=np.intp)
    srt = sorted(k1)
    # dense labels over the runs of equal values in the sorted copy
    labels = [0] * n
    for i in range(1, n):
        labels[i] = labels[i - 1] if srt[i] == srt[i - 1] else labels[i - 1] + 1
    locate = partial(bisect_left, srt)
    lab1 = [labels[j] for j in map(locate, k1)]
    lab2 = []
    for x in k2:
        try:
            j = locate(x)
        except TypeError:
            j = n
        if j == n or srt[j] != x:
            raise ElementNotShared(b[len(lab2)])
        lab2.append(labels[j])
    return _match_buckets(lab1, lab2, labels[-1] + 1, a, b)


def _dense_small_ints(s1, s2) -> bool:
    return (isinstance(s1, np.ndarray) and isinstance(s2, np.ndarray)
            and s1.dtype == s2.dtype and s1.dtype.kind in "bu"
            and s1.dtype.itemsize == 1)


def relabel_by_hash(s1, s2) -> np.ndarray:
    """Index permutation ``P`` with ``P[h1] = h2``, labels found by hashing.

    Labels are handed out in order of first appearance in ``s1``. The result
    is the same permutation :func:`relabel_by_sort` produces.
    """
    _check_lengths(s1, s2)
    if _dense_small_ints(s1, s2):
        # bytes and booleans: the value itself is the label
        lab1 = s1.astype(np.intp)
        lab2 = s2.astype(np.intp)
        return _match_buckets(lab1, lab2, 256, s1.tolist(), s2.tolist())
    k1, k2, a, b = _keys(s1, s2)
    n = len(k1)
    if n == 0:
        return np.empty(0, dtype=np.intp)
    table: dict = {}
    for x in k1:
        if x not in table:
            table[x] = len(table)
    lab1 = [table[x] for x in k1]
    try:
        lab2 = [table[x] for x in k2]
    except KeyError:
        i = next(i for i, x in enumerate(k2) if x not in table)
        raise ElementNotShared(b[i]) from None
    return _match_buckets(lab1, lab2, len(table), a, b)


def tau_seq_sort(s1, s2) -> int:
    """Kendall tau sequence distance via sorting and binary search.

    ``s1`` and ``s2`` may be lists, tuples, strings or 1-D numpy arrays.

    >>> tau_seq_sort([3, 1, 4, 2], [2, 4, 3, 1])
    5
    """
    return count_inversions(relabel_by_sort(s1, s2))


def tau_seq_hash(s1, s2) -> int:
    """Kendall tau sequence distance via a hash table.

    >>> tau_seq_hash("hello world hello blue sky".split(),
    ...              "hello blue sky hello world".split())
    5
    """
    return count_inversions(relabel_by_hash(s1, s2))


def tau_seq(s1, s2, algorithm: str = "hash") -> int:
    """Dispatch to :func:`tau_seq_hash` (default) or :func:`tau_seq_sort`."""
    if algorithm == "hash":
        return tau_seq_hash(s1, s2)
    if algorithm == "sort":
        return tau_seq_sort(s1, s2)
    raise ValueError(f"unknown algorithm {algorithm!r}, expected 'sort' or 'hash'")
