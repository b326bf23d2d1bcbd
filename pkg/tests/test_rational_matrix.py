from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from demazure.exceptions.exceptions import MatrixError
from demazure.linalg.rational_matrix import (
    RationalMatrix, checked_determinant, determinant, rank, to_fraction)
from tests.strategies import integer_matrices


@pytest.mark.parametrize("entry, value", [
    (3, Fraction(3)),
    ("-3/4", Fraction(-3, 4)),
    (Fraction(2, 6), Fraction(1, 3)),
    ("5", Fraction(5)),
])
def test_to_fraction(entry, value):
    assert to_fraction(entry) == value


@pytest.mark.parametrize("entry", [0.5, True, "abc", "1/0", None, [1]])
def test_to_fraction_rejects(entry):
    with pytest.raises(MatrixError):
        to_fraction(entry)


@pytest.mark.parametrize("rows", [[], [[]], [[1, 2], [3]], [[1, 0.5]]])
def test_invalid_matrix(rows):
    with pytest.raises(MatrixError):
        RationalMatrix(rows)


def test_matrix_accessors():
    matrix = RationalMatrix([[1, "1/2", 0], [0, 2, 3]])
    assert matrix.row_count == 2
    assert matrix.column_count == 3
    assert not matrix.is_square
    assert matrix[(1, 2)] == Fraction(1, 2)
    assert matrix.column(3) == (Fraction(0), Fraction(3))
    assert matrix.transpose().rows == (
        (1, 0), (Fraction(1, 2), 2), (0, 3))
    with pytest.raises(MatrixError):
        matrix[(3, 1)]
    with pytest.raises(MatrixError):
        matrix.column(0)


def test_identity_and_from_entries():
    assert RationalMatrix.identity(2) == RationalMatrix([[1, 0], [0, 1]])
    matrix = RationalMatrix.from_entries(3, {(1, 3): 1, (2, 1): "1/2"})
    assert matrix.rows == ((0, 0, 1), (Fraction(1, 2), 0, 0), (0, 0, 0))


def test_submatrix_and_replaced():
    matrix = RationalMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert matrix.submatrix([1, 3], [2, 3]) == RationalMatrix([[2, 3], [8, 9]])
    changed = matrix.replaced({(2, 2): "1/3"})
    assert changed[(2, 2)] == Fraction(1, 3)
    assert matrix[(2, 2)] == 5
    with pytest.raises(MatrixError):
        matrix.replaced({(4, 1): 1})


def test_determinant():
    assert determinant(RationalMatrix([[1, 2], [3, 4]])) == -2
    assert RationalMatrix([["1/2", 0], [0, "2/3"]]).determinant() == Fraction(1, 3)
    assert RationalMatrix.identity(4).determinant() == 1
    with pytest.raises(MatrixError):
        RationalMatrix([[1, 2]]).determinant()


def test_rank():
    assert rank(RationalMatrix.identity(3)) == 3
    assert rank(RationalMatrix([[0, 0], [0, 0]])) == 0
    assert rank(RationalMatrix([["1/2", 1], [1, 2]])) == 1
    assert rank(RationalMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 0]])) == 2


def test_matmul():
    left = RationalMatrix([[1, 2], [0, 1]])
    right = RationalMatrix([[1, 0], [3, 1]])
    assert left @ right == RationalMatrix([[7, 2], [3, 1]])
    with pytest.raises(MatrixError):
        left @ RationalMatrix([[1, 2, 3]])


def test_checked_determinant():
    assert checked_determinant(RationalMatrix([[2, 1], [1, 1]])) == 1
    assert checked_determinant(RationalMatrix.identity(6)) == 1


@given(st.integers(min_value=1, max_value=5).flatmap(
    lambda size: st.tuples(integer_matrices(size), integer_matrices(size))))
def test_determinant_is_multiplicative(pair):
    first, second = pair
    assert (first @ second).determinant() == (
        first.determinant() * second.determinant())


@given(st.integers(min_value=1, max_value=4).flatmap(integer_matrices))
def test_determinant_agrees_with_expansion(matrix):
    assert matrix.determinant() == matrix.laplace_determinant()
    assert matrix.transpose().determinant() == matrix.determinant()
    assert (matrix.rank() == matrix.row_count) == bool(matrix.determinant())
