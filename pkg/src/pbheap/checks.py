"""Randomised differential and invariant checks behind ``pbheap check``."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .core import (
    LEAF,
    InvariantMemo,
    Ordering,
    elements,
    is_empty,
    natural_order,
    reverse_order,
    shape_of,
)
from .oracle import OracleHeap, level_order_shape, multiset_of
from .update import heapify, heapsort, insert, remove

# An op is ("insert", value) or ("remove", None).
Op = tuple

FAULTS = ("swap-compare",)

VALUE_RANGE = (-1000, 1000)


@dataclass
class PropertyResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: Optional[list] = None


@dataclass
class CheckReport:
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def library_order(fault: Optional[str] = None) -> Ordering:
    if fault is None:
        return natural_order
    if fault == "swap-compare":
        return reverse_order
    raise ValueError(f"unknown fault {fault!r}; choose from {', '.join(FAULTS)}")


def random_ops(rng: random.Random, count: int) -> list:
    ops = []
    live = 0
    lo, hi = VALUE_RANGE
    for _ in range(count):
        if live == 0 or rng.random() < 0.5:
            ops.append(("insert", rng.randint(lo, hi)))
            live += 1
        else:
            ops.append(("remove", None))
            live -= 1
    return ops


def replay(ops: Sequence[Op], compare: Ordering = natural_order) -> Optional[str]:
    """Run ``ops`` on the persistent heap and the oracle side by side.

    Returns a description of the first disagreement or invariant violation,
    or None. A remove on an empty heap is skipped on both sides so that any
    subsequence of a valid run is itself replayable.
    """
    memo = InvariantMemo(natural_order)
    h = LEAF
    oracle = OracleHeap()
    for step, (kind, value) in enumerate(ops):
        if kind == "insert":
            h = insert(h, value, compare)
            oracle.insert(value)
        elif len(oracle):
            h = remove(h, compare)
            oracle.delete_min()
        if h.size != len(oracle):
            return f"step {step}: size {h.size} != oracle {len(oracle)}"
        if len(oracle) and h.element != oracle.min():
            return f"step {step}: minimum {h.element!r} != oracle {oracle.min()!r}"
        if not memo.check(h):
            return f"step {step}: invariant violated"
    return None


def shrink(ops: list, fails: Callable[[list], bool]) -> list:
    """Greedy delta-debugging: drop chunks of ops while the failure persists."""
    chunk = max(1, len(ops) // 2)
    while chunk >= 1:
        i = 0
        changed = False
        while i < len(ops):
            candidate = ops[:i] + ops[i + chunk:]
            if candidate and fails(candidate):
                ops = candidate
                changed = True
            else:
                i += chunk
        if not changed:
            chunk //= 2
    return ops


def format_ops(ops: Sequence[Op]) -> str:
    return " ".join(f"insert({v})" if k == "insert" else "remove()" for k, v in ops)


def check_ordering_laws(rng: random.Random, samples: int, compare: Ordering = natural_order) -> PropertyResult:
    lo, hi = VALUE_RANGE
    sign = lambda v: (v > 0) - (v < 0)
    for _ in range(samples):
        a, b, c = (rng.randint(lo, hi) for _ in range(3))
        if sign(compare(a, b)) != -sign(compare(b, a)):
            return PropertyResult("ordering-laws", False, f"antisymmetry fails on {a}, {b}")
        if (compare(a, b) == 0) != (a == b):
            return PropertyResult("ordering-laws", False, f"totality fails on {a}, {b}")
        if compare(a, b) <= 0 and compare(b, c) <= 0 and compare(a, c) > 0:
            return PropertyResult("ordering-laws", False, f"transitivity fails on {a}, {b}, {c}")
    return PropertyResult("ordering-laws", True, f"{samples} triples")


def check_differential(ops: list, compare: Ordering) -> tuple[PropertyResult, PropertyResult]:
    """Differential (minimum, size) agreement plus invariants, as two results."""
    memo = InvariantMemo(natural_order)
    h = LEAF
    oracle = OracleHeap()
    diff_msg = inv_msg = None
    for step, (kind, value) in enumerate(ops):
        if kind == "insert":
            h = insert(h, value, compare)
            oracle.insert(value)
        elif len(oracle):
            h = remove(h, compare)
            oracle.delete_min()
        if diff_msg is None:
            if h.size != len(oracle):
                diff_msg = f"step {step}: size {h.size} != oracle {len(oracle)}"
            elif len(oracle) and h.element != oracle.min():
                diff_msg = f"step {step}: minimum {h.element!r} != oracle {oracle.min()!r}"
        if inv_msg is None and not memo.check(h):
            inv_msg = f"step {step}: invariant violated"
        if diff_msg and inv_msg:
            break

    def result(name: str, msg: Optional[str]) -> PropertyResult:
        if msg is None:
            return PropertyResult(name, True, f"{len(ops)} ops")
        small = shrink(list(ops), lambda c: replay(c, compare) is not None)
        return PropertyResult(name, False, msg, small)

    return result("differential", diff_msg), result("invariants", inv_msg)


def check_persistence(ops: list, compare: Ordering, keep: int = 1000) -> PropertyResult:
    """Every captured version still holds exactly what it held when created."""
    stride = max(1, len(ops) // keep)
    h = LEAF
    captured = [(h, ())]
    for step, (kind, value) in enumerate(ops):
        if kind == "insert":
            h = insert(h, value, compare)
        elif not is_empty(h):
            h = remove(h, compare)
        if step % stride == 0:
            captured.append((h, tuple(elements(h))))
    memo = InvariantMemo(natural_order)
    for i, (version, snapshot) in enumerate(captured):
        if tuple(elements(version)) != snapshot:
            return PropertyResult("persistence", False, f"version {i} changed after later updates")
        if not memo.check(version):
            return PropertyResult("persistence", False, f"version {i} no longer valid")
    return PropertyResult("persistence", True, f"{len(captured)} versions")


def check_heapsort(rng: random.Random, count: int, compare: Ordering) -> PropertyResult:
    lo, hi = VALUE_RANGE
    fails = lambda seq: heapsort(seq, compare) != sorted(seq)
    for _ in range(count):
        seq = [rng.randint(lo, hi) for _ in range(rng.randint(0, 64))]
        if fails(seq):
            small = shrink(seq, fails)
            return PropertyResult("heapsort", False, f"sorts {small} as {heapsort(small, compare)}")
    return PropertyResult("heapsort", True, f"{count} sequences")


def heapify_problem(seq: list, compare: Ordering) -> Optional[str]:
    h = heapify(seq, compare)
    if multiset_of(h) != Counter(seq):
        return "multiset differs"
    if shape_of(h) != level_order_shape(len(seq)):
        return "shape differs from the level-order layout"
    if not InvariantMemo(natural_order).check(h):
        return "invariant violated"
    return None


def check_heapify(rng: random.Random, count: int, compare: Ordering) -> PropertyResult:
    lo, hi = VALUE_RANGE
    for _ in range(count):
        seq = [rng.randint(lo, hi) for _ in range(rng.randint(0, 512))]
        if heapify_problem(seq, compare):
            small = shrink(seq, lambda c: heapify_problem(c, compare) is not None)
            return PropertyResult("heapify", False, f"{heapify_problem(small, compare)} for input {small}")
    return PropertyResult("heapify", True, f"{count} inputs")


def run_checks(seed: int = 1, ops: int = 10000, fault: Optional[str] = None) -> CheckReport:
    compare = library_order(fault)
    rng = random.Random(seed)
    sequence = random_ops(rng, ops)
    batch = ops // 100
    report = CheckReport()
    report.results.append(check_ordering_laws(rng, batch, natural_order))
    report.results.extend(check_differential(sequence, compare))
    report.results.append(check_persistence(sequence, compare))
    report.results.append(check_heapsort(rng, batch, compare))
    report.results.append(check_heapify(rng, min(batch, 20), compare))
    return report
