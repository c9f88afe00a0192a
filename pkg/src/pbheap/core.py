"""Persistent binary heap nodes, the smart constructor and invariant checkers.

A heap is either ``LEAF`` (empty) or a :class:`Branch` carrying an element,
two child heaps and the cached ``size``/``height`` of the subtree. Nodes are
never mutated; every update builds new branches on one root-to-leaf path and
shares the rest of the tree with its predecessor.

Height convention: ``LEAF`` has height 0 and a singleton has height 1, so a
tree is perfect exactly when ``size == 2 ** height - 1``.
"""

from __future__ import annotations

from typing import Any, Callable, NamedTuple, TypeVar, Union

E = TypeVar("E")

#: Three-way comparison: negative, zero or positive as ``a`` is less than,
#: equal to or greater than ``b``.
Ordering = Callable[[Any, Any], int]


class EmptyHeapError(IndexError):
    """Raised when the minimum of an empty heap is requested or removed."""


def natural_order(a: Any, b: Any) -> int:
    return (a > b) - (a < b)


def reverse_order(a: Any, b: Any) -> int:
    return (b > a) - (b < a)


class _Leaf:
    __slots__ = ()

    size = 0
    height = 0

    def __repr__(self) -> str:
        return "Leaf"

    def __reduce__(self):
        return "LEAF"

    def __bool__(self) -> bool:
        return False

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Leaf)

    def __hash__(self) -> int:
        return 0

    @property
    def element(self):
        raise EmptyHeapError("Leaf.element")

    @property
    def left(self):
        raise EmptyHeapError("Leaf.left")

    @property
    def right(self):
        raise EmptyHeapError("Leaf.right")


LEAF = _Leaf()


class Branch(NamedTuple):
    element: Any
    left: Heap
    right: Heap
    size: int
    height: int

    def __repr__(self) -> str:
        return f"Branch({self.element!r}, {self.left!r}, {self.right!r})"

    def __bool__(self) -> bool:
        return True


Heap = Union[_Leaf, Branch]

# skips the NamedTuple keyword-handling __new__ on the hot path
_new_tuple = tuple.__new__


def make_leaf() -> _Leaf:
    return LEAF


def make_heap(x: Any, left: Heap = LEAF, right: Heap = LEAF) -> Branch:
    """Build a branch over ``left`` and ``right``, computing the cached fields.

    Heap order is not checked here; the update algorithms are responsible
    for handing in children that respect it.
    """
    lh, rh = left.height, right.height
    return _new_tuple(
        Branch, (x, left, right, left.size + right.size + 1, (lh if lh > rh else rh) + 1)
    )


def singleton(x: Any) -> Branch:
    return _new_tuple(Branch, (x, LEAF, LEAF, 1, 1))


def is_empty(h: Heap) -> bool:
    return not isinstance(h, Branch)


def minimum(h: Heap) -> Any:
    if is_empty(h):
        raise EmptyHeapError("minimum of an empty heap")
    return h.element


def size(h: Heap) -> int:
    return h.size


def height(h: Heap) -> int:
    return h.height


def is_perfect(h: Heap) -> bool:
    return h.size == (1 << h.height) - 1


# Checkers below recompute everything from the tree structure and never trust
# the cached fields, except check_caches which compares the two.




def _complete(h: Heap) -> tuple[bool, bool, int]:
    """(complete, perfect, height) of ``h`` from the structure alone."""
    if is_empty(h):
        return True, True, 0
    lc, lp, lh = _complete(h.left)
    rc, rp, rh = _complete(h.right)
    if lp and rc and lh == rh:
        ok = True
    elif lc and rp and lh == rh + 1:
        ok = True
    else:
        ok = False
    return ok, ok and lp and rp and lh == rh, max(lh, rh) + 1


def check_shape(h: Heap) -> bool:
    """True iff ``h`` is a complete binary tree (levels filled left to right)."""
    return _complete(h)[0]


def check_heap_order(h: Heap, compare: Ordering = natural_order) -> bool:
    if is_empty(h):
        return True
    stack = [h]
    while stack:
        node = stack.pop()
        for child in (node.left, node.right):
            if not is_empty(child):
                if compare(node.element, child.element) > 0:
                    return False
                stack.append(child)
    return True


def check_caches(h: Heap) -> bool:
    def walk(node: Heap) -> tuple[bool, int, int]:
        if is_empty(node):
            return node.size == 0 and node.height == 0, 0, 0
        lok, ls, lh = walk(node.left)
        rok, rs, rh = walk(node.right)
        s, ht = ls + rs + 1, max(lh, rh) + 1
        return lok and rok and node.size == s and node.height == ht, s, ht

    return walk(h)[0]


def check_invariants(h: Heap, compare: Ordering = natural_order) -> bool:
    return check_shape(h) and check_heap_order(h, compare) and check_caches(h)


class InvariantMemo:
    """Full invariant check that remembers nodes it has already validated.

    Persistent versions share almost all of their nodes, so re-validating a
    long chain of versions only costs the freshly built nodes of each one.
    Validated nodes are kept alive here, which keeps ``id`` keys unambiguous.
    """

    def __init__(self, compare: Ordering = natural_order):
        self.compare = compare
        self._seen: dict[int, tuple[Heap, bool, bool, int, int]] = {}

    def __len__(self) -> int:
        return len(self._seen)

    def _visit(self, h: Heap) -> tuple:
        # -> (node, valid, perfect, size, height)
        if not isinstance(h, Branch):
            return h, h.size == 0 and h.height == 0, True, 0, 0
        hit = self._seen.get(id(h))
        if hit is not None and hit[0] is h:
            return hit
        left, right = h.left, h.right
        _, lok, lp, ls, lh = self._visit(left)
        _, rok, rp, rs, rh = self._visit(right)
        s, ht = ls + rs + 1, (lh if lh > rh else rh) + 1
        ok = (
            lok
            and rok
            and ((lp and lh == rh) or (rp and lh == rh + 1))
            and (not isinstance(left, Branch) or self.compare(h.element, left.element) <= 0)
            and (not isinstance(right, Branch) or self.compare(h.element, right.element) <= 0)
            and h.size == s
            and h.height == ht
        )
        result = self._seen[id(h)] = (h, ok, ok and lp and rp and lh == rh, s, ht)
        return result

    def check(self, h: Heap) -> bool:
        return self._visit(h)[1]


def elements(h: Heap) -> list:
    """All stored elements in pre-order."""
    out = []
    stack = [h]
    while stack:
        node = stack.pop()
        if not is_empty(node):
            out.append(node.element)
            stack.append(node.right)
            stack.append(node.left)
    return out


def shape_of(h: Heap):
    """Nested ``(left, right)`` tuples mirroring the tree, ``None`` for leaves."""
    if is_empty(h):
        return None
    return (shape_of(h.left), shape_of(h.right))
