"""Timing harness comparing the sort-based and hash-based distance routes.

Pairs are generated by drawing a random sequence over an alphabet and
shuffling a copy of it. Random streams come from numpy's PCG64 generator,
seeded per cell from ``(seed, mode, length, alphabet_size, object_size)`` so
a cell's data does not depend on which other cells run.
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import astuple, dataclass, fields
from pathlib import Path

import numpy as np

from .seqdist import tau_seq_hash, tau_seq_sort

ELEMENT_MODES = ("codepoint", "int64", "float64", "object_hcc", "object_lcc")
OBJECT_MODES = ("object_hcc", "object_lcc")
ALGORITHMS = {"sort": tau_seq_sort, "hash": tau_seq_hash}

# first character of the object alphabets; 256 tokens span 'a'..U+0160
_OBJECT_BASE = ord("a")
_MAX_OBJECT_ALPHABET = 0xD800 - _OBJECT_BASE


class BenchFailure(RuntimeError):
    """The two algorithms disagreed on a generated pair."""


@dataclass
class BenchConfig:
    lengths: list[int]
    alphabet_sizes: list[int]
    pairs_per_cell: int = 100
    element_mode: str = "int64"
    object_size: int = 1
    seed: int = 0
    algorithms: tuple[str, ...] = ("sort", "hash")

    def __post_init__(self):
        if self.pairs_per_cell < 1:
            raise ValueError("pairs_per_cell must be at least 1")
        if not self.lengths or not self.alphabet_sizes:
            raise ValueError("lengths and alphabet_sizes must be non-empty")
        if self.element_mode not in ELEMENT_MODES:
            raise ValueError(f"unknown element mode {self.element_mode!r}")
        if self.element_mode in OBJECT_MODES and self.object_size < 1:
            raise ValueError("object modes need object_size >= 1")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown or not self.algorithms:
            raise ValueError(f"algorithms must be a non-empty subset of {sorted(ALGORITHMS)}")
        if any(a < 1 for a in self.alphabet_sizes):
            raise ValueError("alphabet sizes must be at least 1")
        if any(n < 0 for n in self.lengths):
            raise ValueError("lengths must be non-negative")


@dataclass
class BenchRecord:
    element_mode: str
    length: int
    alphabet_size: int
    object_size: int
    algorithm: str
    mean_time_ns: int
    median_time_ns: int
    pairs_measured: int
    distance_checksum: int


def gen_object_alphabet(variant: str, m: int, count: int = 256) -> list[str]:
    """String tokens of length ``m`` whose comparisons are costly or cheap.

    ``"hcc"``: ``m - 1`` NUL characters then a distinct last character, so
    any comparison scans the whole token. ``"lcc"``: ``m`` copies of a
    distinct character, so unequal tokens differ at the first position.
    """
    if m < 1:
        raise ValueError("object size m must be at least 1")
    if not 1 <= count <= _MAX_OBJECT_ALPHABET:
        raise ValueError(f"count must be in [1, {_MAX_OBJECT_ALPHABET}]")
    chars = [chr(_OBJECT_BASE + i) for i in range(count)]
    variant = variant.lower()
    if variant == "hcc":
        prefix = "\0" * (m - 1)
        return [prefix + c for c in chars]
    if variant == "lcc":
        return [c * m for c in chars]
    raise ValueError(f"unknown object variant {variant!r}, expected 'hcc' or 'lcc'")


def gen_pair(mode: str, length: int, alphabet_size: int, rng: np.random.Generator,
             object_size: int = 1):
    """A random sequence and a shuffled copy of it.

    codepoint mode yields ``str``; int64/float64 yield numpy arrays; object
    modes yield lists of string tokens.
    """
    if alphabet_size < 1:
        raise ValueError("alphabet_size must be at least 1")
    if mode in OBJECT_MODES and alphabet_size > _MAX_OBJECT_ALPHABET:
        raise ValueError("alphabet too large for object tokens")
    if mode == "codepoint" and alphabet_size > 0x110000:
        raise ValueError("alphabet larger than the code space")
    draw = rng.integers(0, alphabet_size, size=length)
    perm = rng.permutation(length)
    if mode == "int64":
        first = draw.astype(np.int64)
        return first, first[perm]
    if mode == "float64":
        first = 1.0 * draw.astype(np.float64)
        return first, first[perm]
    if mode == "codepoint":
        chars = [chr(c) for c in draw.tolist()]
        return "".join(chars), "".join(chars[i] for i in perm.tolist())
    if mode in OBJECT_MODES:
        alphabet = gen_object_alphabet(mode[-3:], object_size, alphabet_size)
        first = [alphabet[c] for c in draw.tolist()]
        return first, [first[i] for i in perm.tolist()]
    raise ValueError(f"unknown element mode {mode!r}")


def _cell_rng(config: BenchConfig, length: int, alphabet_size: int) -> np.random.Generator:
    m = config.object_size if config.element_mode in OBJECT_MODES else 0
    key = [config.seed, ELEMENT_MODES.index(config.element_mode), length, alphabet_size, m]
    return np.random.Generator(np.random.PCG64(key))


def run_cell(config: BenchConfig, length: int, alphabet_size: int) -> list[BenchRecord]:
    rng = _cell_rng(config, length, alphabet_size)
    pairs = [gen_pair(config.element_mode, length, alphabet_size, rng, config.object_size)
             for _ in range(config.pairs_per_cell)]
    algs = [(name, ALGORITHMS[name]) for name in config.algorithms]

    for _, fn in algs:  # warm-up, not measured
        fn(*pairs[0])

    times = {name: [] for name, _ in algs}
    sums = {name: 0 for name, _ in algs}
    for s1, s2 in pairs:
        seen = set()
        for name, fn in algs:
            t0 = time.perf_counter_ns()
            d = fn(s1, s2)
            times[name].append(time.perf_counter_ns() - t0)
            sums[name] += d
            seen.add(d)
        if len(seen) > 1:
            raise BenchFailure(f"algorithms disagree on a {config.element_mode} pair "
                               f"of length {length}: {sorted(seen)}")

    object_size = config.object_size if config.element_mode in OBJECT_MODES else 0
    return [
        BenchRecord(
            element_mode=config.element_mode,
            length=length,
            alphabet_size=alphabet_size,
            object_size=object_size,
            algorithm=name,
            mean_time_ns=max(1, round(statistics.fmean(times[name]))),
            median_time_ns=max(1, round(statistics.median(times[name]))),
            pairs_measured=len(times[name]),
            distance_checksum=sums[name],
        )
        for name, _ in algs
    ]


def run_suite(config: BenchConfig) -> list[BenchRecord]:
    """One record per (length, alphabet size, algorithm) cell, in grid order."""
    records = []
    for length in config.lengths:
        for alphabet_size in config.alphabet_sizes:
            records.extend(run_cell(config, length, alphabet_size))
    return records


CSV_FIELDS = [f.name for f in fields(BenchRecord)]


def write_csv(records, sink) -> None:
    """Write records as CSV to a path or an open text stream."""
    if isinstance(sink, (str, Path)):
        with open(sink, "w", encoding="utf-8", newline="") as fh:
            write_csv(records, fh)
        return
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in records:
        writer.writerow(astuple(r))


def read_csv(source) -> list[BenchRecord]:
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8", newline="") as fh:
            return read_csv(fh)
    types = {f.name: f.type for f in fields(BenchRecord)}
    out = []
    for row in csv.DictReader(source):
        out.append(BenchRecord(**{k: (v if types[k] == "str" else int(v))
                                  for k, v in row.items()}))
    return out


def records_to_csv(records) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()


def compare_algorithms(records) -> list[tuple[BenchRecord, BenchRecord]]:
    """Pair up the sort and hash records of every cell that ran both."""
    cells: dict[tuple, dict[str, BenchRecord]] = {}
    for r in records:
        key = (r.element_mode, r.length, r.alphabet_size, r.object_size)
        cells.setdefault(key, {})[r.algorithm] = r
    return [(c["sort"], c["hash"]) for c in cells.values() if "sort" in c and "hash" in c]


def ordering_report(records) -> str:
    """Human-readable line per cell saying which algorithm had the lower median."""
    lines = []
    for s, h in compare_algorithms(records):
        faster = "hash" if h.median_time_ns <= s.median_time_ns else "sort"
        ratio = s.median_time_ns / h.median_time_ns
        m = f" m={s.object_size}" if s.object_size else ""
        lines.append(f"{s.element_mode} L={s.length} |alphabet|={s.alphabet_size}{m}: "
                     f"sort/hash median ratio {ratio:.2f}, {faster} faster")
    return "\n".join(lines)
