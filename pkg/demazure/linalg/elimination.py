from fractions import Fraction
from math import lcm, prod
from typing import List, Sequence, Tuple


def clear_denominators(
        rows: Sequence[Sequence[Fraction]]
    ) -> Tuple[List[List[int]], int]:
    """Scales every row by the lcm of its denominators.

    Parameters:
    -----------
        rows (Sequence[Sequence[Fraction]]): A rational matrix.

    Returns:
    --------
        Tuple[List[List[int]], int]: The integer matrix and the product 
            of the row scale factors.
    """
    integers: List[List[int]] = []
    scales: List[int] = []
    for row in rows:
        scale = lcm(*(entry.denominator for entry in row)) if row else 1
        integers.append([int(entry * scale) for entry in row])
        scales.append(scale)
    return integers, prod(scales)


def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Computes an integer determinant by fraction-free elimination.

    Every division in the elimination is exact.

    Parameters:
    -----------
        rows (Sequence[Sequence[int]]): A square integer matrix.

    Returns:
    --------
        int: The determinant; 1 for the empty matrix.
    """
    matrix = [list(row) for row in rows]
    size = len(matrix)
    sign, previous = 1, 1
    for k in range(size - 1):
        if not matrix[k][k]:
            swap = next(
                (i for i in range(k + 1, size) if matrix[i][k]), None)
            if swap is None:
                return 0
            matrix[k], matrix[swap] = matrix[swap], matrix[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                matrix[i][j] = (matrix[k][k] * matrix[i][j]
                                - matrix[i][k] * matrix[k][j]) // previous
        previous = matrix[k][k]
    return sign * matrix[-1][-1] if size else 1


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Computes the rank of an integer matrix by fraction-free elimination.

    Parameters:
    -----------
        rows (Sequence[Sequence[int]]): A rectangular integer matrix.

    Returns:
    --------
        int: The rank over the rationals.
    """
    matrix = [list(row) for row in rows]
    width = len(matrix[0]) if matrix else 0
    rank, previous = 0, 1
    for column in range(width):
        pivot = next(
            (i for i in range(rank, len(matrix)) if matrix[i][column]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        for i in range(rank + 1, len(matrix)):
            for j in range(column + 1, width):
                matrix[i][j] = (
                    matrix[rank][column] * matrix[i][j]
                    - matrix[i][column] * matrix[rank][j]) // previous
            matrix[i][column] = 0
        previous = matrix[rank][column]
        rank += 1
    return rank


def laplace_determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Cofactor expansion along the first row, for small cross-checks."""
    if not rows:
        return Fraction(1)
    if len(rows) == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for column, entry in enumerate(rows[0]):
        if entry:
            minor = [row[:column] + row[column + 1:] for row in rows[1:]]
            sign = -1 if column % 2 else 1
            total += sign * entry * laplace_determinant(minor)
    return total
