from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from kendall_seq import (
    LengthMismatch,
    PairCounts,
    PenaltyOutOfRange,
    TiesNotAllowed,
    kendall_distance_penalty,
    kendall_tau_correlation,
    kendall_tau_distance,
    pair_counts,
    tau_seq_hash,
)
from kendall_seq.oracle import quadratic_pair_counts

SIGMA1, SIGMA2 = [2, 4, 1, 3], [4, 1, 3, 2]
PARTIAL1, PARTIAL2 = [1, 2, 3, 1, 1, 2, 2], [3, 2, 1, 2, 1, 2, 1]


def test_pair_counts_examples():
    c = pair_counts(PARTIAL1, PARTIAL2)
    assert (c.discordant, c.tied_one) == (8, 10)
    assert pair_counts(SIGMA1, SIGMA2) == PairCounts(1, 5, 0, 0)
    assert pair_counts([1, 2, 3], [1, 2, 3]) == PairCounts(3, 0, 0, 0)
    assert pair_counts([], []) == PairCounts(0, 0, 0, 0)


def test_pair_counts_length_mismatch():
    with pytest.raises(LengthMismatch):
        pair_counts([1, 2], [1])


def test_ranks_need_not_be_contiguous():
    assert pair_counts([20, 40, 10, 30], [4.5, 1.0, 3.0, 2.0]) == pair_counts(SIGMA1, SIGMA2)


def test_correlation():
    assert kendall_tau_correlation(SIGMA1, SIGMA1) == 1.0
    assert kendall_tau_correlation([1, 2, 3, 4], [4, 3, 2, 1]) == -1.0
    assert Fraction(kendall_tau_correlation(SIGMA1, SIGMA2)).limit_denominator(100) == Fraction(-2, 3)


def test_correlation_rejects_ties_and_short_input():
    with pytest.raises(TiesNotAllowed):
        kendall_tau_correlation(PARTIAL1, PARTIAL2)
    with pytest.raises(ValueError):
        kendall_tau_correlation([1], [1])


def test_distance():
    assert kendall_tau_distance(SIGMA1, SIGMA2) == 5
    assert kendall_tau_distance(SIGMA1, SIGMA1) == 0
    assert kendall_tau_distance(SIGMA1, SIGMA2, normalized=True) == pytest.approx(5 / 6, abs=1e-15)
    with pytest.raises(TiesNotAllowed):
        kendall_tau_distance([1, 1], [1, 2])


def test_penalty():
    assert kendall_distance_penalty(PARTIAL1, PARTIAL2, 0.5) == 13.0
    for p in (0.0, 0.25, 1.0):
        assert kendall_distance_penalty(PARTIAL1, PARTIAL2, p) == 8 + 10 * p
        assert kendall_distance_penalty(PARTIAL1, PARTIAL1, p) == 0.0
        assert kendall_distance_penalty(SIGMA1, SIGMA2, p) == 5
    with pytest.raises(PenaltyOutOfRange):
        kendall_distance_penalty(SIGMA1, SIGMA2, 1.5)
    with pytest.raises(PenaltyOutOfRange):
        kendall_distance_penalty(SIGMA1, SIGMA2, -0.1)


def test_penalty_distance_is_not_swap_distance():
    # rankings read as plain integer sequences
    assert tau_seq_hash(PARTIAL1, PARTIAL2) == 6
    assert all(kendall_distance_penalty(PARTIAL1, PARTIAL2, p) >= 8 for p in (0.0, 0.5, 1.0))


partial_pair = st.integers(0, 60).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, 6), min_size=n, max_size=n),
    st.lists(st.integers(0, 6), min_size=n, max_size=n)))


@given(partial_pair)
def test_matches_quadratic_oracle(pair):
    r1, r2 = pair
    c = pair_counts(r1, r2)
    assert c == quadratic_pair_counts(r1, r2)
    n = len(r1)
    assert c.total == n * (n - 1) // 2


def test_matches_oracle_large():
    rng = np.random.default_rng(3)
    for n in (128, 512):
        r1, r2 = rng.integers(0, 40, n), rng.integers(0, 40, n)
        assert pair_counts(r1, r2) == quadratic_pair_counts(r1.tolist(), r2.tolist())


def sigma_from_p(p):
    sigma = [0] * len(p)
    for r, i in enumerate(p):
        sigma[i] = r
    return sigma


@given(st.integers(2, 60).flatmap(lambda n: st.tuples(
    st.permutations(list(range(n))), st.permutations(list(range(n))))))
def test_total_ranking_identities(pair):
    p1, p2 = pair
    n = len(p1)
    s1, s2 = sigma_from_p(p1), sigma_from_p(p2)
    k = kendall_tau_distance(s1, s2)
    assert k == tau_seq_hash(p1, p2)
    tau = kendall_tau_correlation(s1, s2)
    assert tau == pytest.approx(1 - 4 * k / (n * (n - 1)), abs=1e-12)
    assert -1.0 <= tau <= 1.0
