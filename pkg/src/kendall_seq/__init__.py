"""Kendall tau distances for sequences with repeated elements and for rankings."""

from .errors import (
    CountMismatch,
    DistanceError,
    ElementNotShared,
    LengthMismatch,
    PenaltyOutOfRange,
    SizeLimitExceeded,
    TiesNotAllowed,
)
from .inversions import count_inversions
from .rank_metrics import (
    PairCounts,
    kendall_distance_penalty,
    kendall_tau_correlation,
    kendall_tau_distance,
    pair_counts,
)
from .seqdist import relabel_by_hash, relabel_by_sort, tau_seq, tau_seq_hash, tau_seq_sort

__version__ = "0.1.0"

__all__ = [
    "CountMismatch",
    "DistanceError",
    "ElementNotShared",
    "LengthMismatch",
    "PairCounts",
    "PenaltyOutOfRange",
    "SizeLimitExceeded",
    "TiesNotAllowed",
    "count_inversions",
    "kendall_distance_penalty",
    "kendall_tau_correlation",
    "kendall_tau_distance",
    "pair_counts",
    "relabel_by_hash",
    "relabel_by_sort",
    "tau_seq",
    "tau_seq_hash",
    "tau_seq_sort",
]
