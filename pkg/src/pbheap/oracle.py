"""Reference implementations used as ground truth by the tests and ``check``.

Nothing here touches the persistent heap algorithms: the array heap is the
textbook sift-up/sift-down version with its own comparison call.
"""

from __future__ import annotations

from collections import Counter
from typing import Any, Callable, Iterable, Optional


def _default_less(a: Any, b: Any) -> bool:
    return a < b


class OracleHeap:
    """Mutable array-backed binary min-heap."""

    def __init__(self, items: Iterable[Any] = (), less: Callable[[Any, Any], bool] = _default_less):
        self.less = less
        self.slots: list = []
        for x in items:
            self.insert(x)

    def __len__(self) -> int:
        return len(self.slots)

    def insert(self, x: Any) -> None:
        slots = self.slots
        slots.append(x)
        i = len(slots) - 1
        while i > 0:
            parent = (i - 1) // 2
            if not self.less(slots[i], slots[parent]):
                break
            slots[i], slots[parent] = slots[parent], slots[i]
            i = parent

    def min(self) -> Any:
        if not self.slots:
            raise IndexError("min of an empty oracle heap")
        return self.slots[0]

    def delete_min(self) -> Any:
        slots = self.slots
        if not slots:
            raise IndexError("delete_min of an empty oracle heap")
        top = slots[0]
        last = slots.pop()
        if slots:
            slots[0] = last
            n = len(slots)
            i = 0
            while True:
                smallest = i
                for c in (2 * i + 1, 2 * i + 2):
                    if c < n and self.less(slots[c], slots[smallest]):
                        smallest = c
                if smallest == i:
                    break
                slots[i], slots[smallest] = slots[smallest], slots[i]
                i = smallest
        return top

    def is_valid(self) -> bool:
        s = self.slots
        return all(not self.less(s[i], s[(i - 1) // 2]) for i in range(1, len(s)))


def level_order_shape(n: int, i: int = 0) -> Optional[tuple]:
    """Shape of the complete tree on ``n`` nodes, from array index arithmetic.

    Same encoding as :func:`pbheap.core.shape_of`: ``None`` for an empty
    slot, ``(left, right)`` otherwise.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if i >= n:
        return None
    return (level_order_shape(n, 2 * i + 1), level_order_shape(n, 2 * i + 2))


def subtree_sizes(n: int) -> tuple[int, int]:
    """Node counts of the root's left and right subtrees in a complete tree of ``n`` nodes."""

    def count(i: int) -> int:
        return 0 if i >= n else 1 + count(2 * i + 1) + count(2 * i + 2)

    if n <= 0:
        return 0, 0
    return count(1), count(2)


def multiset_of(h) -> Counter:
    """Multiset of the elements stored in a persistent heap."""
    out: Counter = Counter()
    stack = [h]
    while stack:
        node = stack.pop()
        if node.size:
            out[node.element] += 1
            stack.append(node.left)
            stack.append(node.right)
    return out

