# Adjacent-swap distance between sequences that may repeat elements.
#
# Run with:  python demos/01_sequence_distance.py

import numpy as np

from kendall_seq import (
    CountMismatch,
    relabel_by_hash,
    relabel_by_sort,
    tau_seq_hash,
    tau_seq_sort,
)
from kendall_seq.oracle import bfs_min_swaps

# Two arrays of words holding the same words the same number of times.
s1 = ["hello", "world", "hello", "blue", "sky"]
s2 = ["hello", "blue", "sky", "hello", "world"]
print("words:", tau_seq_hash(s1, s2))  # 5

# Both routes build the same index mapping: the k-th copy of a value in s1
# goes to the k-th copy in s2. The distance is its inversion count.
a, b = "abacada", "bcaaaad"
print("mapping (sort):", relabel_by_sort(a, b).tolist())
print("mapping (hash):", relabel_by_hash(a, b).tolist())
print("distance:", tau_seq_sort(a, b), "search says", bfs_min_swaps(a, b))

# Anything orderable works for the sort route, anything hashable for the
# hash route: strings, numpy arrays, tuples of tokens.
x = np.random.default_rng(0).integers(0, 16, 10_000)
y = np.random.default_rng(1).permutation(x)
print("10k ints:", tau_seq_sort(x, y), tau_seq_hash(x, y))

# Floats are matched by bit pattern, so nan is a usable element.
print("floats:", tau_seq_hash([float("nan"), 1.0, 2.0], [2.0, 1.0, float("nan")]))

# The distance is undefined unless both sides hold the same multiset.
try:
    tau_seq_hash("aab", "abb")
except CountMismatch as exc:
    print("error:", exc)
