"""Insertion, bottom-up construction and removal for persistent binary heaps.

Every public function takes an optional three-way ``compare`` (natural order
by default) and an optional ``observer``. The observer is called as
``observer(event, depth)`` with ``event`` one of ``"visit"`` (the recursion
entered a branch node at tree level ``depth``, root = 1), ``"compare"`` and
``"alloc"`` (a branch node was constructed). With no observer the
instrumentation costs one ``is None`` test per step.

Swaps happen only on strict comparisons, so equal keys never move past each
other.
"""

from __future__ import annotations

from typing import Any, Iterable, Iterator, Optional

from .core import (
    LEAF,
    Branch,
    EmptyHeapError,
    Heap,
    Ordering,
    _new_tuple,
    natural_order,
)

Observer = Any  # Callable[[str, int], None]


def _node(x, l: Heap, r: Heap, obs: Optional[Observer], d: int) -> Branch:
    # make_heap, inlined for the hot path
    if obs is not None:
        obs("alloc", d)
    lh, rh = l.height, r.height
    return _new_tuple(Branch, (x, l, r, l.size + r.size + 1, (lh if lh > rh else rh) + 1))


# -- insertion ---------------------------------------------------------------


def _bubble_up(x, l: Heap, r: Heap, cmp, obs, d) -> Branch:
    if isinstance(l, Branch):
        if obs is not None:
            obs("compare", d)
        if cmp(x, l.element) > 0:
            return _node(l.element, _node(x, l.left, l.right, obs, d + 1), r, obs, d)
    if isinstance(r, Branch):
        if obs is not None:
            obs("compare", d)
        if cmp(x, r.element) > 0:
            return _node(r.element, l, _node(x, r.left, r.right, obs, d + 1), obs, d)
    return _node(x, l, r, obs, d)


def bubble_up(
    x: Any,
    left: Heap,
    right: Heap,
    compare: Ordering = natural_order,
    observer: Optional[Observer] = None,
) -> Branch:
    """Place ``x`` above ``left`` and ``right``, swapping it with a smaller child root.

    The left child is tried first. Only one level is fixed: on the insert
    path the child was already repaired by the recursive call.
    """
    return _bubble_up(x, left, right, compare, observer, 1)


def _insert(h: Heap, x, cmp, obs, d) -> Branch:
    if not isinstance(h, Branch):
        return _node(x, LEAF, LEAF, obs, d)
    if obs is not None:
        obs("visit", d)
    l, r = h.left, h.right
    if l.size < (1 << l.height) - 1:
        return _bubble_up(h.element, _insert(l, x, cmp, obs, d + 1), r, cmp, obs, d)
    if r.size < (1 << r.height) - 1:
        return _bubble_up(h.element, l, _insert(r, x, cmp, obs, d + 1), cmp, obs, d)
    if r.height < l.height:
        return _bubble_up(h.element, l, _insert(r, x, cmp, obs, d + 1), cmp, obs, d)
    return _bubble_up(h.element, _insert(l, x, cmp, obs, d + 1), r, cmp, obs, d)


def insert(
    h: Heap,
    x: Any,
    compare: Ordering = natural_order,
    observer: Optional[Observer] = None,
) -> Branch:
    """Return a new heap holding the elements of ``h`` plus ``x``.

    The new node goes into the first free slot of the last level: descend
    into the first child that is not perfect, otherwise into the right child
    if it is shorter, otherwise start a new level on the left.
    """
    return _insert(h, x, compare, observer, 1)


# -- construction --------------------------------------------------------------


def _bubble_down(x, l: Heap, r: Heap, cmp, obs, d) -> Branch:
    if obs is not None:
        obs("visit", d)
    if isinstance(l, Branch):
        y = l.element
        if isinstance(r, Branch):
            z = r.element
            if obs is not None:
                obs("compare", d)
            if cmp(y, z) > 0:
                if obs is not None:
                    obs("compare", d)
                if cmp(x, z) > 0:
                    return _node(
                        z, l, _bubble_down(x, r.left, r.right, cmp, obs, d + 1), obs, d
                    )
        if obs is not None:
            obs("compare", d)
        if cmp(x, y) > 0:
            return _node(y, _bubble_down(x, l.left, l.right, cmp, obs, d + 1), r, obs, d)
    return _node(x, l, r, obs, d)


def bubble_down(
    x: Any,
    left: Heap,
    right: Heap,
    compare: Ordering = natural_order,
    observer: Optional[Observer] = None,
) -> Branch:
    """Build a node from ``x`` and two heaps, sinking ``x`` until order holds.

    ``x`` follows the right child only when its root is strictly smaller than
    the left root; on ties it goes left.
    """
    return _bubble_down(x, left, right, compare, observer, 1)


def heapify(
    items: Iterable[Any],
    compare: Ordering = natural_order,
    observer: Optional[Observer] = None,
) -> Heap:
    """Build a heap from ``items`` in linear time.

    Node ``i`` of the level-order layout gets children ``2i + 1`` and
    ``2i + 2``, so the result has exactly the shape of the array heap.
    """
    a = list(items)
    n = len(a)

    def build(i: int, d: int) -> Heap:
        if i >= n:
            return LEAF
        return _bubble_down(
            a[i], build(2 * i + 1, d + 1), build(2 * i + 2, d + 1), compare, observer, d
        )

    return build(0, 1)


# -- removal -----------------------------------------------------------------


def float_left(x: Any, left: Heap, right: Heap, observer: Optional[Observer] = None) -> Branch:
    return _float_left(x, left, right, observer, 1)


def float_right(x: Any, left: Heap, right: Heap, observer: Optional[Observer] = None) -> Branch:
    return _float_right(x, left, right, observer, 1)


def _float_left(x, l: Heap, r: Heap, obs, d) -> Branch:
    # no comparison: x is parked below on purpose, bubble-down repairs it
    if isinstance(l, Branch):
        return _node(l.element, _node(x, l.left, l.right, obs, d + 1), r, obs, d)
    return _node(x, l, r, obs, d)


def _float_right(x, l: Heap, r: Heap, obs, d) -> Branch:
    if isinstance(r, Branch):
        return _node(r.element, l, _node(x, r.left, r.right, obs, d + 1), obs, d)
    return _node(x, l, r, obs, d)


def _merge_children(l: Heap, r: Heap, obs, d) -> Heap:
    if not isinstance(l, Branch) and not isinstance(r, Branch):
        return LEAF
    if obs is not None:
        obs("visit", d)
    if l.size < (1 << l.height) - 1:
        return _float_left(l.element, _merge_children(l.left, l.right, obs, d + 1), r, obs, d - 1)
    if r.size < (1 << r.height) - 1:
        return _float_right(r.element, l, _merge_children(r.left, r.right, obs, d + 1), obs, d - 1)
    if r.height < l.height:
        return _float_left(l.element, _merge_children(l.left, l.right, obs, d + 1), r, obs, d - 1)
    return _float_right(r.element, l, _merge_children(r.left, r.right, obs, d + 1), obs, d - 1)


def merge_children(left: Heap, right: Heap, observer: Optional[Observer] = None) -> Heap:
    """Join the two children of a removed root into one complete tree.

    The last node of the bottom level is carried up to the root slot; only
    the new root may be out of order afterwards. Internal to :func:`remove`,
    exposed for testing: ``left`` and ``right`` must be the children of a
    genuine complete heap.
    """
    return _merge_children(left, right, observer, 2)


def bubble_root_down(
    h: Heap,
    compare: Ordering = natural_order,
    observer: Optional[Observer] = None,
) -> Heap:
    if not isinstance(h, Branch):
        return LEAF
    return _bubble_down(h.element, h.left, h.right, compare, observer, 1)


def remove(
    h: Heap,
    compare: Ordering = natural_order,
    observer: Optional[Observer] = None,
) -> Heap:
    """Return ``h`` without its minimum. Raises EmptyHeapError on an empty heap."""
    if not isinstance(h, Branch):
        raise EmptyHeapError("remove from an empty heap")
    if observer is not None:
        observer("visit", 1)
    return bubble_root_down(_merge_children(h.left, h.right, observer, 2), compare, observer)


def pop(
    h: Heap,
    compare: Ordering = natural_order,
    observer: Optional[Observer] = None,
) -> tuple[Any, Heap]:
    if not isinstance(h, Branch):
        raise EmptyHeapError("pop from an empty heap")
    return h.element, remove(h, compare, observer)


def drain(h: Heap, compare: Ordering = natural_order) -> Iterator[Any]:
    """Yield the elements of ``h`` in ascending order."""
    while isinstance(h, Branch):
        yield h.element
        h = remove(h, compare)


def heapsort(items: Iterable[Any], compare: Ordering = natural_order) -> list:
    return list(drain(heapify(items, compare), compare))
