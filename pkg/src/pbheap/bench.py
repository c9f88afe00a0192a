"""Counter-based benchmarks for insert, remove and heapify."""

from __future__ import annotations

import csv
import random
import time
from dataclasses import astuple, dataclass
from typing import IO, Iterable, Iterator

from .core import LEAF
from .instrument import OpCounters
from .update import heapify, insert, remove

CSV_HEADER = ("operation", "n", "rep", "comparisons", "allocations", "depth", "wall_nanos")
OPERATIONS = ("insert", "remove", "heapify")

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


@dataclass
class BenchRecord:
    operation: str
    n: int
    rep: int
    comparisons: int
    allocations: int
    depth: int
    wall_nanos: int


def _values(rng: random.Random, n: int) -> list:
    return [rng.randint(INT64_MIN, INT64_MAX) for _ in range(n)]


def _timed(fn) -> tuple[object, int]:
    t0 = time.perf_counter_ns()
    out = fn()
    return out, time.perf_counter_ns() - t0


def measure(operation: str, n: int, rep: int, seed: int, base=None) -> BenchRecord:
    """One measurement. Counters come from an instrumented run, wall time from a bare one.

    ``base`` is the prebuilt heap of size ``n`` for insert/remove; being
    persistent it can be shared by every repetition.
    """
    rng = random.Random(f"{seed}:{operation}:{n}:{rep}")
    counters = OpCounters()
    if operation == "heapify":
        values = _values(rng, n)
        _, wall = _timed(lambda: heapify(values))
        counters.settle(LEAF, heapify(values, observer=counters))
    else:
        if base is None:
            base = heapify(_values(random.Random(f"{seed}:base:{n}"), n))
        if operation == "insert":
            x = rng.randint(INT64_MIN, INT64_MAX)
            _, wall = _timed(lambda: insert(base, x))
            after = insert(base, x, observer=counters)
        elif operation == "remove":
            _, wall = _timed(lambda: remove(base))
            after = remove(base, observer=counters)
        else:
            raise ValueError(f"unknown operation {operation!r}")
        counters.settle(base, after)
    return BenchRecord(
        operation, n, rep, counters.comparisons, counters.allocations, counters.max_depth, wall
    )


def run_bench(sizes: Iterable[int], reps: int, seed: int = 1) -> Iterator[BenchRecord]:
    for n in sizes:
        base = heapify(_values(random.Random(f"{seed}:base:{n}"), n))
        for operation in OPERATIONS:
            for rep in range(reps):
                yield measure(operation, n, rep, seed, base)


def write_csv(records: Iterable[BenchRecord], out: IO[str]) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    rows = 0
    for rec in records:
        writer.writerow(astuple(rec))
        rows += 1
    return rows
