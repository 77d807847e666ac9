"""
Tests for truncated power series and their walk counts
"""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings as hypothesis_settings
from hypothesis import strategies as st

from pascal_arrays.core.exceptions import InconsistentCountError, InvalidSpecError
from pascal_arrays.services.graphs import a_inf, a_tree, catalan_numbers, double_young
from pascal_arrays.services.series import (
    Series,
    bell_numbers,
    bfile,
    quadratic_series,
    series_bell_egf,
    series_exp,
    series_h0,
    series_hlambda,
    series_matches_walks,
    series_sqrt,
)


def test_catalan_series(catalan):
    """Test that H₀ = 1 + x·H₀² gives the Catalan numbers"""
    assert series_h0(7).integers() == catalan
    assert quadratic_series(2, 3).integers() == [1, 2, 8, 40]


def test_hlambda_series():
    """Test series of tree graphs with repeating branching"""
    assert series_hlambda((2, 1), 4).integers() == [1, 2, 6, 20, 70]
    assert series_hlambda((2, 2, 1), 5).integers() == [1, 2, 8, 36, 168, 796]
    assert series_hlambda((), 3).integers() == [1, 1, 2, 5]

    with pytest.raises(InvalidSpecError):
        series_hlambda((0, 1), 3)
    with pytest.raises(InvalidSpecError):
        series_hlambda((1,), -1)


def test_series_arithmetic():
    """Test products, shifts and truncation"""
    x = Series.of([0, 1, 0, 0])
    one = Series.one(3)

    # Verify (1 + x)² and the shift
    assert ((one + x) * (one + x)).integers() == [1, 2, 1, 0]
    assert x.shift().integers() == [0, 0, 1, 0]
    assert (one - one).is_zero()
    assert (x * 3).truncate(1).integers() == [0, 3]

    with pytest.raises(InvalidSpecError):
        Series.of([])


def test_square_root():
    """Test the square root of 1 − 4x"""
    root = series_sqrt(Series.of([1, -4, 0, 0, 0]))

    # Verify the coefficients and the square
    assert root.integers() == [1, -2, -2, -4, -10]
    assert (root * root).integers() == [1, -4, 0, 0, 0]

    with pytest.raises(InvalidSpecError):
        series_sqrt(Series.of([2, 1]))


def test_exponential():
    """Test exp of x and the rejected constant term"""
    e = series_exp(Series.of([0, 1, 0, 0]))

    assert e.coefficients == (Fraction(1), Fraction(1), Fraction(1, 2), Fraction(1, 6))
    with pytest.raises(InconsistentCountError):
        e.integers()
    with pytest.raises(InvalidSpecError):
        series_exp(Series.of([1, 1]))


def test_bell_numbers():
    """Test Bell numbers from the recurrence and the exponential formula"""
    expected = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147]

    assert bell_numbers(9) == expected
    assert series_bell_egf(9) == expected


def test_series_matches_walks(catalan):
    """Test series against closed walks on graphs"""
    assert series_matches_walks(a_inf(), series_h0(5), 5)
    assert series_matches_walks(a_tree((2, 1)), series_hlambda((2, 1), 4), 4)
    assert not series_matches_walks(a_inf(), quadratic_series(2, 3), 3)

    with pytest.raises(InvalidSpecError):
        series_matches_walks(a_inf(), series_h0(2), 4)


def test_bfile():
    """Test b-file lines"""
    assert bfile([1, 2]) == "0\t1\n1\t2"
    assert bfile([5], offset=3) == "3\t5"


@hypothesis_settings(max_examples=25, deadline=None)
@given(
    lam=st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=3),
    m=st.integers(min_value=0, max_value=4),
)
def test_hlambda_counts_tree_walks(lam, m):
    """Test that H^λ counts closed walks on the tree graph of λ"""
    assert series_matches_walks(a_tree(lam), series_hlambda(lam, m), m)


def test_bell_numbers_count_double_young_walks():
    """Test Bell numbers against closed walks on the double Young graph"""
    assert catalan_numbers(double_young(), 9) == bell_numbers(9)
