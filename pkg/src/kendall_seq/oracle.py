"""Slow reference implementations, used only to validate the fast paths."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .errors import CountMismatch, ElementNotShared, LengthMismatch, SizeLimitExceeded
from .rank_metrics import PairCounts

MAX_BFS_LENGTH = 10


def _neighbours(state: tuple):
    for i in range(len(state) - 1):
        if state[i] != state[i + 1]:
            yield state[:i] + (state[i + 1], state[i]) + state[i + 2:]


def _check_pair(s1, s2) -> tuple[tuple, tuple]:
    a, b = tuple(s1), tuple(s2)
    if len(a) != len(b):
        raise LengthMismatch(len(a), len(b))
    if len(a) > MAX_BFS_LENGTH:
        raise SizeLimitExceeded(len(a), MAX_BFS_LENGTH)
    ca, cb = Counter(a), Counter(b)
    if ca != cb:
        for x in b:
            if x not in ca:
                raise ElementNotShared(x)
        x = next(x for x in a if ca[x] != cb[x])
        raise CountMismatch(x, ca[x], cb[x])
    return a, b


def bfs_min_swaps(s1, s2) -> int:
    """Minimum adjacent swaps from ``s1`` to ``s2`` by breadth-first search.

    Swapping two equal neighbours leaves the sequence unchanged, so those
    moves are skipped; they can never lie on a shortest path.
    """
    start, goal = _check_pair(s1, s2)
    if start == goal:
        return 0
    seen = {start}
    frontier = deque([(start, 0)])
    while frontier:
        state, depth = frontier.popleft()
        for nxt in _neighbours(state):
            if nxt == goal:
                return depth + 1
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, depth + 1))
    raise AssertionError("unreachable: same-multiset sequences are connected")


def bfs_all_distances(s) -> dict[tuple, int]:
    """Swap distance from ``s`` to every rearrangement of ``s``."""
    start, _ = _check_pair(s, s)
    dist = {start: 0}
    frontier = deque([start])
    while frontier:
        state = frontier.popleft()
        d = dist[state] + 1
        for nxt in _neighbours(state):
            if nxt not in dist:
                dist[nxt] = d
                frontier.append(nxt)
    return dist


def _cmp(x, y) -> int:
    return (x > y) - (x < y)


def classify_pairs(r1, r2) -> dict[str, list[tuple[int, int]]]:
    """Every pair ``(i, j)``, ``i < j``, by class. Elements are numbered from 1."""
    if len(r1) != len(r2):
        raise LengthMismatch(len(r1), len(r2))
    out = {"concordant": [], "discordant": [], "tied_one": [], "tied_both": []}
    n = len(r1)
    for i in range(n):
        for j in range(i + 1, n):
            s = _cmp(r1[i], r1[j])
            t = _cmp(r2[i], r2[j])
            if s == 0 and t == 0:
                key = "tied_both"
            elif s == 0 or t == 0:
                key = "tied_one"
            elif s == t:
                key = "concordant"
            else:
                key = "discordant"
            out[key].append((i + 1, j + 1))
    return out


def quadratic_pair_counts(r1, r2) -> PairCounts:
    return PairCounts(**{k: len(v) for k, v in classify_pairs(r1, r2).items()})


def quadratic_inversions(p) -> int:
    """Count ``p[i] > p[j]`` over all ``i < j``, one row of pairs at a time."""
    a = np.asarray(p, dtype=np.int64)
    return int(sum(np.count_nonzero(a[i + 1:] < a[i]) for i in range(a.shape[0])))


@dataclass
class CrossCheck:
    checked: int = 0
    mismatches: list = field(default_factory=list)
    """``(s1, s2, sort, hash, bfs)`` for every disagreeing pair."""

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cross_check(max_n: int, alphabet_size: int, budget: int | None = None) -> CrossCheck:
    """Compare both fast algorithms with breadth-first search on every pair.

    Enumerates each sequence over ``range(alphabet_size)`` of length
    ``0..max_n`` and every rearrangement of it, stopping after ``budget``
    pairs when given. One search per first sequence covers all its partners.
    """
    from .seqdist import tau_seq_hash, tau_seq_sort

    if max_n > MAX_BFS_LENGTH:
        raise SizeLimitExceeded(max_n, MAX_BFS_LENGTH)
    result = CrossCheck()
    for n in range(max_n + 1):
        for s1 in product(range(alphabet_size), repeat=n):
            for s2, d in bfs_all_distances(s1).items():
                if budget is not None and result.checked >= budget:
                    return result
                a = tau_seq_sort(s1, s2)
                b = tau_seq_hash(s1, s2)
                result.checked += 1
                if not a == b == d:
                    result.mismatches.append((s1, s2, a, b, d))
    return result
