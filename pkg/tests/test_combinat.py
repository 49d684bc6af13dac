import pytest

from stablemac.combinat import (bruhat_less, bruhat_support_ok, compositions, dominance_less,
                                partitions, s_i, sort_composition, zero_pad)
from stablemac.qt import qt
from stablemac.xpoly import XPoly


@pytest.mark.parametrize("mu, lam", [((0, 2, 0, 1), (2, 1)), ((0, 0), ()), ((2, 2), (2, 2))])
def test_sort(mu, lam):
    assert sort_composition(mu) == lam


@pytest.mark.parametrize("nu, lam, want", [
    ((1, 1, 1), (2, 1), True),
    ((2, 2), (3, 1), True),
    ((2, 1), (2, 1), False),
    ((3,), (2, 1), False),
])
def test_dominance(nu, lam, want):
    assert dominance_less(nu, lam) is want


def test_partition_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_compositions():
    assert sorted(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(1, 0)) == []


def test_s_i_and_pad():
    assert s_i((2, 0, 1), 2) == (2, 1, 0)
    assert zero_pad((1,), 2) == (1, 0, 0)


def test_bruhat_sorted_orbit():
    # within an orbit the sorted (decreasing) arrangement is the bottom
    assert bruhat_less((2, 0), (0, 2))
    assert not bruhat_less((0, 2), (2, 0))
    assert bruhat_less((1, 0), (2,) and (1, 1)) is False


def test_bruhat_support():
    x = XPoly.monomial
    c, d = qt("1 - t"), qt("q")
    assert bruhat_support_ok((0, 2), x((0, 2)) + x((1, 1), c) + x((2, 0), d))
    assert bruhat_support_ok((1,), x((1,)))
    assert not bruhat_support_ok((2, 0), x((2, 0)) + x((0, 2)))
