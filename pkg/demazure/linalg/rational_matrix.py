from fractions import Fraction
from typing import Final, Iterable, List, Mapping, Sequence, Tuple

from typing_extensions import Self

from demazure.exceptions.exceptions import MatrixError, VerificationError
from demazure.exceptions.messages import Messages
from demazure.linalg.elimination import (
    bareiss_determinant, bareiss_rank, clear_denominators, laplace_determinant)
from demazure.types.types import Types


def to_fraction(entry: Types.Scalar) -> Fraction:
    """Reads an int, Fraction or rational string such as '-3/4'.

    Raises:
    -------
        MatrixError: If the entry is not a rational number.
    """
    if isinstance(entry, bool) or isinstance(entry, float):
        raise MatrixError(Messages.MATRIX_BAD_ENTRY.format(entry=entry))
    try:
        return Fraction(entry)
    except (TypeError, ValueError, ZeroDivisionError):
        raise MatrixError(Messages.MATRIX_BAD_ENTRY.format(entry=entry))


class RationalMatrix:
    """Represents an immutable dense matrix of exact rationals.

    Entries are addressed with 1-based (row, column) pairs.

    Attributes:
    -----------
        LAPLACE_LIMIT (Final[int]): The largest size for which the 
            cofactor cross-check of the determinant is run.
    """

    LAPLACE_LIMIT: Final[int] = 4

    def __init__(self, rows: Sequence[Sequence[Types.Scalar]]) -> None:
        """Initializes a RationalMatrix object.

        Parameters:
        -----------
            rows (Sequence[Sequence[Types.Scalar]]): The entries, row by 
                row, as ints, Fractions or rational strings.

        Raises:
        -------
            MatrixError: If the matrix is empty, ragged, or holds an 
                entry that is not rational.
        """
        if not rows or not rows[0]:
            raise MatrixError(Messages.MATRIX_EMPTY)
        width = len(rows[0])
        for index, row in enumerate(rows, 1):
            if len(row) != width:
                raise MatrixError(Messages.MATRIX_RAGGED.format(
                    row=index, current=len(row), expected=width))
        self.__rows: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(to_fraction(entry) for entry in row) for row in rows)

    @classmethod
    def identity(cls, size: int) -> Self:
        return cls([[int(i == j) for j in range(size)] for i in range(size)])

    @classmethod
    def from_entries(
            cls, size: int, entries: Mapping[Types.Location, Types.Scalar]
        ) -> Self:
        """Builds a square matrix that is zero outside the given entries."""
        rows = [[Fraction(0)] * size for _ in range(size)]
        for (row, column), value in entries.items():
            rows[row - 1][column - 1] = to_fraction(value)
        return cls(rows)

    @property
    def rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """Returns the entries row by row."""
        return self.__rows

    @property
    def row_count(self) -> int:
        return len(self.__rows)

    @property
    def column_count(self) -> int:
        return len(self.__rows[0])

    @property
    def is_square(self) -> bool:
        return self.row_count == self.column_count

    def column(self, index: int) -> Tuple[Fraction, ...]:
        """Returns column j, top to bottom."""
        self.__check_index(index, self.column_count)
        return tuple(row[index - 1] for row in self.__rows)

    def submatrix(
            self, rows: Iterable[int], columns: Iterable[int]
        ) -> "RationalMatrix":
        """Returns the submatrix on the listed 1-based rows and columns."""
        rows, columns = list(rows), list(columns)
        for row in rows:
            self.__check_index(row, self.row_count)
        for column in columns:
            self.__check_index(column, self.column_count)
        return RationalMatrix([
            [self.__rows[row - 1][column - 1] for column in columns]
            for row in rows])

    def replaced(
            self, entries: Mapping[Types.Location, Types.Scalar]
        ) -> "RationalMatrix":
        """Returns a copy with some entries overwritten."""
        rows: List[List[Fraction]] = [list(row) for row in self.__rows]
        for (row, column), value in entries.items():
            self.__check_index(row, self.row_count)
            self.__check_index(column, self.column_count)
            rows[row - 1][column - 1] = to_fraction(value)
        return RationalMatrix(rows)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.__rows)))

    def determinant(self) -> Fraction:
        """Computes the exact determinant by fraction-free elimination.

        Returns:
        --------
            Fraction: The determinant.

        Raises:
        -------
            MatrixError: If the matrix is not square.
        """
        if not self.is_square:
            raise MatrixError(Messages.MATRIX_NOT_SQUARE.format(
                rows=self.row_count, cols=self.column_count))
        integers, scale = clear_denominators(self.__rows)
        return Fraction(bareiss_determinant(integers), scale)

    def laplace_determinant(self) -> Fraction:
        """Computes the determinant by cofactor expansion."""
        if not self.is_square:
            raise MatrixError(Messages.MATRIX_NOT_SQUARE.format(
                rows=self.row_count, cols=self.column_count))
        return laplace_determinant(self.__rows)

    def rank(self) -> int:
        """Computes the exact rank over the rationals."""
        integers, _ = clear_denominators(self.__rows)
        return bareiss_rank(integers)

    def __check_index(self, index: int, bound: int) -> None:
        if not 1 <= index <= bound:
            raise MatrixError(Messages.INDEX_OUT_OF_RANGE.format(
                index=index, bound=bound))

    def __getitem__(self, location: Types.Location) -> Fraction:
        row, column = location
        self.__check_index(row, self.row_count)
        self.__check_index(column, self.column_count)
        return self.__rows[row - 1][column - 1]

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.column_count != other.row_count:
            raise MatrixError(Messages.MATRIX_DIMENSION.format(
                expected=self.column_count, current=other.row_count))
        columns = list(zip(*other.rows))
        return RationalMatrix([
            [sum((a * b for a, b in zip(row, column)), Fraction(0))
             for column in columns]
            for row in self.__rows])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.__rows == other.rows

    def __hash__(self) -> int:
        return hash(self.__rows)

    def __repr__(self) -> str:
        return "RationalMatrix(%s)" % (
            [[str(entry) for entry in row] for row in self.__rows],)


def determinant(matrix: RationalMatrix) -> Fraction:
    return matrix.determinant()


def rank(matrix: RationalMatrix) -> int:
    return matrix.rank()


def checked_determinant(matrix: RationalMatrix) -> Fraction:
    """Computes the determinant, cross-checked by cofactor expansion for 
    matrices of size at most LAPLACE_LIMIT.

    Raises:
    -------
        VerificationError: If the two methods disagree.
    """
    value = matrix.determinant()
    if matrix.row_count <= RationalMatrix.LAPLACE_LIMIT:
        if value != (expansion := matrix.laplace_determinant()):
            raise VerificationError(Messages.DETERMINANT_MISMATCH.format(
                elimination=value, expansion=expansion))
    return value
