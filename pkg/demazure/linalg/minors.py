from fractions import Fraction
from typing import Sequence

from demazure.exceptions.exceptions import MatrixError
from demazure.exceptions.messages import Messages
from demazure.linalg.rational_matrix import RationalMatrix
from demazure.tableaux.tabloid import Tabloid


def initial_minor(
        matrix: RationalMatrix, size: int, rows: Sequence[int]) -> Fraction:
    """Evaluates a left-initial minor of a square matrix.

    Parameters:
    -----------
        matrix (RationalMatrix): The n x n matrix f.
        size (int): The number q of leading columns.
        rows (Sequence[int]): The q distinct rows r_1 < ... < r_q.

    Returns:
    --------
        Fraction: The determinant of the submatrix on the listed rows 
            and the first q columns.

    Raises:
    -------
        MatrixError: If the matrix is not square or the rows are invalid.
    """
    n = matrix.row_count
    if not matrix.is_square:
        raise MatrixError(Messages.MATRIX_NOT_SQUARE.format(
            rows=n, cols=matrix.column_count))
    rows = list(rows)
    if (len(rows) != size or size > n or len(set(rows)) != size
            or any(not 1 <= row <= n for row in rows)):
        raise MatrixError(Messages.MINOR_ROWS_INVALID.format(
            size=size, n=n, rows=rows))
    if not size:
        return Fraction(1)
    return matrix.submatrix(sorted(rows), range(1, size + 1)).determinant()


def eval_monomial(tabloid: Tabloid, matrix: RationalMatrix) -> Fraction:
    """Evaluates the monomial of a tabloid at an ordered basis.

    The monomial is the product, over the columns of T, of the 
    initial minor whose rows are the values of the column.

    Parameters:
    -----------
        tabloid (Tabloid): The tabloid T.
        matrix (RationalMatrix): The n x n matrix f.

    Returns:
    --------
        Fraction: The value tau(f); 1 for the empty shape.

    Raises:
    -------
        MatrixError: If the sizes of T and f differ.
    """
    if matrix.row_count != tabloid.n:
        raise MatrixError(Messages.MATRIX_DIMENSION.format(
            expected=tabloid.n, current=matrix.row_count))
    value = Fraction(1)
    for column in tabloid.columns:
        if not (value := value * initial_minor(matrix, len(column), column)):
            break
    return value
