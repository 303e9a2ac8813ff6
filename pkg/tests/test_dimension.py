from decimal import Decimal

import pytest

from multishift.dimension import SeriesResult, dimB_goldenmean, fib
from multishift.shift_core import blocks, sft

GOLDEN = sft(2, ["11"])


def test_fib_pinned():
    assert fib(0) == 1
    assert fib(1) == 2
    assert fib(5) == 13
    assert fib(20) == 17711
    with pytest.raises(ValueError):
        fib(-1)


def test_fib_counts_blocks():
    for n in range(1, 21):
        assert fib(n) == len(blocks(GOLDEN, n))


def test_single_term_is_one_quarter():
    # first term: log(2) / 2 over the 2 log 2 prefactor
    result = dimB_goldenmean(1)
    assert result.partial_sum == Decimal("0.25")


def test_partial_sums_increase_and_stabilize():
    values = [dimB_goldenmean(t).partial_sum for t in (5, 10, 20, 40, 60)]
    assert values == sorted(values)
    assert abs(values[-1] - values[-2]) < Decimal("1e-9")


def test_tail_bound_dominates_truncation():
    full = dimB_goldenmean(200).partial_sum
    for t in (1, 2, 5, 10, 20, 60, 120):
        r = dimB_goldenmean(t)
        assert full - r.partial_sum >= 0
        assert full - r.partial_sum <= r.tail_bound, t


def test_pairwise_difference_within_tail():
    for a, b in ((10, 30), (40, 60), (25, 200)):
        ra, rb = dimB_goldenmean(a), dimB_goldenmean(b)
        assert abs(rb.partial_sum - ra.partial_sum) <= ra.tail_bound


def test_summation_orders_agree():
    forward = dimB_goldenmean(60).partial_sum
    backward = dimB_goldenmean(60, reverse=True).partial_sum
    assert abs(forward - backward) < Decimal("1e-12")


def test_result_shape():
    r = dimB_goldenmean(8)
    assert isinstance(r, SeriesResult)
    assert r.terms_used == 8
    assert r.tail_bound > 0
    with pytest.raises(ValueError):
        dimB_goldenmean(0)
