from collections import Counter

import pytest

from pbheap import LEAF, heapify, singleton
from pbheap.oracle import OracleHeap, level_order_shape, multiset_of, subtree_sizes


def test_sorted_drain():
    o = OracleHeap([3, 1, 2])
    assert [o.delete_min() for _ in range(3)] == [1, 2, 3]


def test_min():
    assert OracleHeap([5]).min() == 5


def test_empty_access_fails():
    o = OracleHeap()
    with pytest.raises(IndexError):
        o.min()
    with pytest.raises(IndexError):
        o.delete_min()


def test_self_check_drain_nondecreasing():
    import random

    rng = random.Random(3)
    values = [rng.randint(-50, 50) for _ in range(500)]
    o = OracleHeap(values)
    assert o.is_valid()
    out = [o.delete_min() for _ in range(len(values))]
    assert out == sorted(values)


def test_custom_less():
    o = OracleHeap([1, 5, 3], less=lambda a, b: a > b)
    assert o.delete_min() == 5


def test_level_order_shape():
    assert level_order_shape(0) is None
    assert level_order_shape(1) == (None, None)
    assert level_order_shape(4) == (((None, None), None), ((None, None)))
    with pytest.raises(ValueError):
        level_order_shape(-1)


@pytest.mark.parametrize("n, expected", [(0, (0, 0)), (1, (0, 0)), (4, (2, 1)), (7, (3, 3)), (10, (6, 3))])
def test_subtree_sizes(n, expected):
    assert subtree_sizes(n) == expected


def test_multiset_of():
    assert multiset_of(LEAF) == Counter()
    assert multiset_of(singleton(7)) == Counter({7: 1})
    assert multiset_of(heapify([2, 2, 1])) == Counter({2: 2, 1: 1})
