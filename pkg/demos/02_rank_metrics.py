# Classical Kendall tau on rankings, and why it is not a swap distance once
# ranks tie.
#
# Run with:  python demos/02_rank_metrics.py

from kendall_seq import (
    kendall_distance_penalty,
    kendall_tau_correlation,
    kendall_tau_distance,
    pair_counts,
    tau_seq_hash,
)

# r[i] is the rank given to item i
r1, r2 = [2, 4, 1, 3], [4, 1, 3, 2]
print(pair_counts(r1, r2))
print("distance:", kendall_tau_distance(r1, r2))
print("normalized:", kendall_tau_distance(r1, r2, normalized=True))
print("correlation:", kendall_tau_correlation(r1, r2))

# With ties, the penalized distance charges p per pair tied on one side only.
t1, t2 = [1, 2, 3, 1, 1, 2, 2], [3, 2, 1, 2, 1, 2, 1]
c = pair_counts(t1, t2)
print(c)
for p in (0.5, 1.0):
    print(f"K^({p}):", kendall_distance_penalty(t1, t2, p))

# Read as plain integer sequences the same arrays are only 6 swaps apart,
# fewer than the 8 discordant pairs.
print("adjacent swaps:", tau_seq_hash(t1, t2))
