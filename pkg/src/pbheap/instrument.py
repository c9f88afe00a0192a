"""Operation counters for complexity measurements."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Heap, is_empty


@dataclass
class OpCounters:
    """Observer that tallies the events emitted by the update functions.

    ``branch_allocations`` counts every branch constructed, including the
    short-lived ones a swap rebuilds immediately. ``allocations`` is the
    number of branch nodes the resulting version does not share with its
    predecessor; it is filled in by :meth:`settle`.
    """

    comparisons: int = 0
    branch_allocations: int = 0
    max_depth: int = 0
    allocations: int = 0

    def __call__(self, event: str, depth: int) -> None:
        if event == "compare":
            self.comparisons += 1
        elif event == "alloc":
            self.branch_allocations += 1
        elif event == "visit":
            if depth > self.max_depth:
                self.max_depth = depth

    def reset(self) -> None:
        self.comparisons = self.branch_allocations = self.max_depth = self.allocations = 0

    def settle(self, before: Heap, after: Heap) -> int:
        self.allocations = fresh_nodes(after, before)
        return self.allocations


def fresh_nodes(new: Heap, old: Heap) -> int:
    """Count branches of ``new`` that are not the node in the same position of ``old``.

    The update algorithms never move a shared subtree to another position, so
    this is exactly the number of nodes ``new`` adds. If one ever did, the
    count would only err upwards.
    """
    count = 0
    stack = [(new, old)]
    while stack:
        a, b = stack.pop()
        if a is b or is_empty(a):
            continue
        count += 1
        if is_empty(b):
            stack.append((a.left, b))
            stack.append((a.right, b))
        else:
            stack.append((a.left, b.left))
            stack.append((a.right, b.right))
    return count
