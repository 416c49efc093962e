"""Kendall tau correlation and distances on total and partial rankings.

A ranking is given in sigma form: ``r[i]`` is the rank of element ``i``.
Only the relative order and equality of rank values matter, so ranks need not
start at 1 or be contiguous.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch, PenaltyOutOfRange, TiesNotAllowed
from .inversions import count_inversions

__all__ = [
    "PairCounts",
    "kendall_distance_penalty",
    "kendall_tau_correlation",
    "kendall_tau_distance",
    "pair_counts",
]


@dataclass(frozen=True)
class PairCounts:
    """Classification of all ``n(n-1)/2`` element pairs of two rankings."""

    concordant: int
    discordant: int
    tied_one: int
    """Pairs tied in exactly one of the two rankings."""
    tied_both: int

    @property
    def total(self) -> int:
        return self.concordant + self.discordant + self.tied_one + self.tied_both


def _tied_pairs(group_sizes: np.ndarray) -> int:
    g = group_sizes.astype(np.int64)
    return int((g * (g - 1) // 2).sum())


def _as_rankings(r1, r2) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(r1)
    b = np.asarray(r2)
    if a.ndim != 1 or b.ndim != 1:
        raise ValueError("rankings must be one-dimensional")
    if a.shape[0] != b.shape[0]:
        raise LengthMismatch(a.shape[0], b.shape[0])
    return a, b


def pair_counts(r1, r2) -> PairCounts:
    """Count concordant, discordant and tied pairs in ``O(n log n)``.

    Sort the rank tuples by the first ranking, breaking ties by the second,
    then the inversions among the second components are exactly the
    discordant pairs. Ties come from group sizes.

    >>> pair_counts([2, 4, 1, 3], [4, 1, 3, 2])
    PairCounts(concordant=1, discordant=5, tied_one=0, tied_both=0)
    """
    a, b = _as_rankings(r1, r2)
    n = a.shape[0]
    if n < 2:
        return PairCounts(0, 0, 0, 0)
    # dense integer codes keep the inversion kernel on int64 for any rank dtype
    _, ca = np.unique(a, return_inverse=True)
    _, cb = np.unique(b, return_inverse=True)
    order = np.lexsort((cb, ca))
    discordant = count_inversions(cb[order])

    t1 = _tied_pairs(np.bincount(ca))
    t2 = _tied_pairs(np.bincount(cb))
    joint = ca.astype(np.int64) * (int(cb.max()) + 1) + cb
    tied_both = _tied_pairs(np.unique(joint, return_counts=True)[1])
    tied_one = t1 + t2 - 2 * tied_both
    concordant = n * (n - 1) // 2 - discordant - tied_one - tied_both
    return PairCounts(concordant, discordant, tied_one, tied_both)


def _require_total(a: np.ndarray, b: np.ndarray) -> None:
    if np.unique(a).shape[0] != a.shape[0]:
        raise TiesNotAllowed("first ranking")
    if np.unique(b).shape[0] != b.shape[0]:
        raise TiesNotAllowed("second ranking")


def kendall_tau_correlation(r1, r2) -> float:
    """Kendall rank correlation ``2(|C| - |D|) / (n(n-1))`` of two total rankings.

    Rankings with ties are rejected; use :func:`pair_counts` to build a
    tie-aware statistic instead.
    """
    a, b = _as_rankings(r1, r2)
    _require_total(a, b)
    n = a.shape[0]
    if n < 2:
        raise ValueError("correlation needs at least two elements")
    c = pair_counts(a, b)
    return 2.0 * (c.concordant - c.discordant) / (n * (n - 1))


def kendall_tau_distance(r1, r2, normalized: bool = False):
    """Number of discordant pairs between two total rankings.

    With ``normalized=True`` the count is scaled by ``2 / (n(n-1))`` into
    ``[0, 1]`` and a float is returned.
    """
    a, b = _as_rankings(r1, r2)
    _require_total(a, b)
    d = pair_counts(a, b).discordant
    if not normalized:
        return d
    n = a.shape[0]
    if n < 2:
        raise ValueError("normalized distance needs at least two elements")
    return 2.0 * d / (n * (n - 1))


def kendall_distance_penalty(r1, r2, p: float) -> float:
    """Kendall distance with penalty parameter: ``|D| + p * |E|``.

    ``E`` holds the pairs tied in one ranking but not the other. Any ``p`` in
    ``[0, 1]`` is accepted; the result is a metric only for ``0.5 <= p <= 1``.

    >>> kendall_distance_penalty([1, 2, 3, 1, 1, 2, 2], [3, 2, 1, 2, 1, 2, 1], 0.5)
    13.0
    """
    if not 0.0 <= p <= 1.0:
        raise PenaltyOutOfRange(p)
    c = pair_counts(r1, r2)
    return c.discordant + p * c.tied_one
