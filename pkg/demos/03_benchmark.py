# Timing the two routes on random pairs, the same way `kendall-seq bench` does.
#
# Run with:  python demos/03_benchmark.py
# Numbers depend on the machine; only the relative ordering is of interest.

import sys

from kendall_seq.bench import BenchConfig, ordering_report, run_suite, write_csv

# Primitive elements: the hash route skips the sort and binary searches.
config = BenchConfig(lengths=[2 ** k for k in range(8, 14)], alphabet_sizes=[256, 65536],
                     pairs_per_cell=20, element_mode="int64", seed=1)
records = run_suite(config)
write_csv(records, sys.stdout)
print(ordering_report(records))

# Long string tokens that differ in their first character compare cheaply,
# which lets the sort route catch up on short sequences.
for mode in ("object_hcc", "object_lcc"):
    config = BenchConfig(lengths=[256, 1024], alphabet_sizes=[256], pairs_per_cell=10,
                         element_mode=mode, object_size=2048, seed=1)
    print(ordering_report(run_suite(config)))
