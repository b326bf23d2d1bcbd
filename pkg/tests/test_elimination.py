from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from demazure.linalg.elimination import (
    bareiss_determinant, bareiss_rank, clear_denominators, laplace_determinant)


def integer_rows(size):
    return st.lists(
        st.lists(st.integers(min_value=-6, max_value=6),
                 min_size=size, max_size=size),
        min_size=size, max_size=size)


def test_clear_denominators():
    rows, scale = clear_denominators([
        [Fraction(1, 2), Fraction(1, 3)], [Fraction(2), Fraction(1)]])
    assert rows == [[3, 2], [2, 1]]
    assert scale == 6


@pytest.mark.parametrize("rows, value", [
    ([], 1),
    ([[5]], 5),
    ([[1, 2], [3, 4]], -2),
    ([[0, 1], [1, 0]], -1),
    ([[2, 0, 0], [0, 3, 0], [0, 0, 4]], 24),
    ([[1, 2, 3], [2, 4, 6], [1, 0, 0]], 0),
    ([[0, 0, 1], [0, 1, 0], [1, 0, 0]], -1),
])
def test_bareiss_determinant(rows, value):
    assert bareiss_determinant(rows) == value


@pytest.mark.parametrize("rows, value", [
    ([], 0),
    ([[0, 0], [0, 0]], 0),
    ([[1, 2], [2, 4]], 1),
    ([[1, 2, 3], [2, 4, 6], [1, 0, 0]], 2),
    ([[0, 1, 2], [0, 0, 3]], 2),
    ([[1], [2], [3]], 1),
])
def test_bareiss_rank(rows, value):
    assert bareiss_rank(rows) == value


@given(st.integers(min_value=1, max_value=4).flatmap(integer_rows))
def test_bareiss_matches_sympy(rows):
    assert bareiss_determinant(rows) == sympy.Matrix(rows).det()
    assert bareiss_rank(rows) == sympy.Matrix(rows).rank()


@given(st.integers(min_value=1, max_value=4).flatmap(integer_rows))
def test_laplace_matches_bareiss(rows):
    fractions = [[Fraction(entry) for entry in row] for row in rows]
    assert laplace_determinant(fractions) == bareiss_determinant(rows)
