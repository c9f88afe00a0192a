"""Persistent binary min-heaps with structural sharing."""

from .core import (
    LEAF,
    Branch,
    EmptyHeapError,
    Heap,
    InvariantMemo,
    Ordering,
    check_caches,
    check_heap_order,
    check_invariants,
    check_shape,
    elements,
    height,
    is_empty,
    is_perfect,
    make_heap,
    make_leaf,
    minimum,
    natural_order,
    reverse_order,
    shape_of,
    singleton,
    size,
)
from .update import (
    bubble_down,
    bubble_root_down,
    bubble_up,
    drain,
    float_left,
    float_right,
    heapify,
    heapsort,
    insert,
    merge_children,
    pop,
    remove,
)

__version__ = "0.1.0"
