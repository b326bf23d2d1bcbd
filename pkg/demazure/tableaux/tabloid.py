from functools import total_ordering
from itertools import groupby
from typing import Iterable, List, Optional, Sequence, Tuple

from typing_extensions import Self

from demazure.exceptions.exceptions import ShapeError
from demazure.exceptions.messages import Messages
from demazure.tableaux.partition import Partition
from demazure.types.types import Types


@total_ordering
class Tabloid:
    """Represents a column-strict filling of a shape with values in [n].

    Tabloids are stored column-major. Comparison operators implement the 
    total order: columns are compared left to right and each column is 
    compared top to bottom lexicographically. The entrywise partial order 
    is `dominated_by`.
    """

    def __init__(
            self, shape: Partition, columns: Sequence[Sequence[int]]
        ) -> None:
        """Initializes a Tabloid object.

        Parameters:
        -----------
            shape (Partition): The shape of the tabloid.
            columns (Sequence[Sequence[int]]): One list of values per 
                column, left to right, each read top to bottom.

        Raises:
        -------
            ShapeError: If the columns do not fit the shape, a value is 
                outside [1, n], or a column does not strictly increase.
        """
        columns = tuple(tuple(int(v) for v in column) for column in columns)
        if len(columns) != shape.width:
            raise ShapeError(Messages.COLUMN_COUNT_MISMATCH.format(
                shape=list(shape.parts), expected=shape.width,
                current=len(columns)))
        for index, column in enumerate(columns, 1):
            if len(column) != (length := shape.column_length(index)):
                raise ShapeError(Messages.COLUMN_LENGTH_MISMATCH.format(
                    column=index, expected=length, current=len(column)))
            for row, value in enumerate(column, 1):
                if not 1 <= value <= shape.n:
                    raise ShapeError(Messages.VALUE_OUT_OF_RANGE.format(
                        value=value, location=(row, index), n=shape.n))
            if any(upper >= lower for upper, lower in zip(column, column[1:])):
                raise ShapeError(Messages.COLUMN_NOT_STRICT.format(
                    column=index, values=list(column)))
        self.__shape: Partition = shape
        self.__columns: Types.Columns = columns

    @classmethod
    def sorted_from(
            cls, shape: Partition, columns: Iterable[Iterable[int]]
        ) -> Self:
        """Builds a tabloid after sorting each column into increasing order.

        Parameters:
        -----------
            shape (Partition): The shape of the tabloid.
            columns (Iterable[Iterable[int]]): Columns of distinct values.

        Returns:
        --------
            Tabloid: The tabloid with sorted columns.
        """
        return cls(shape, [sorted(column) for column in columns])

    @property
    def shape(self) -> Partition:
        """Returns the shape of the tabloid."""
        return self.__shape

    @property
    def n(self) -> int:
        return self.__shape.n

    @property
    def columns(self) -> Types.Columns:
        """Returns the columns of the tabloid.

        Returns:
        --------
            Types.Columns: The columns left to right, values top to bottom.
        """
        return self.__columns

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        """Returns the n rows of the tabloid, left to right."""
        return tuple(
            tuple(column[row] for column in self.__columns if len(column) > row)
            for row in range(self.n))

    @property
    def is_tableau(self) -> bool:
        """Returns True if every row weakly increases left to right."""
        return self.row_violation() is None

    def row_violation(self) -> Optional[Types.Location]:
        """Finds the leftmost, then topmost, location (r, c) with 
        T(r, c) > T(r, c + 1).

        Returns:
        --------
            Optional[Types.Location]: The location, or None for a tableau.
        """
        for column, (left, right) in enumerate(
                zip(self.__columns, self.__columns[1:]), 1):
            for row, (value, following) in enumerate(zip(left, right), 1):
                if value > following:
                    return row, column
        return None

    def with_sorted_columns(self) -> "Tabloid":
        """Sorts the columns of each given length into total order.

        Returns:
        --------
            Tabloid: The tabloid whose equal-length columns appear in 
                increasing lexicographic order.
        """
        columns: List[Types.Column] = []
        for _, block in groupby(self.__columns, key=len):
            columns.extend(sorted(block))
        return Tabloid(self.__shape, columns)

    def without_last_column(self) -> "Tabloid":
        """Returns T', the tabloid obtained by omitting the rightmost column."""
        return Tabloid(self.__shape.without_last_column(), self.__columns[:-1])

    def dominated_by(self, other: "Tabloid") -> bool:
        """Checks the entrywise partial order T <= U.

        Parameters:
        -----------
            other (Tabloid): The tabloid U of the same shape.

        Returns:
        --------
            bool: True if T(r, c) <= U(r, c) at every location.

        Raises:
        -------
            ShapeError: If the shapes differ.
        """
        self.__check_shape(other)
        return all(
            value <= bound
            for column, upper in zip(self.__columns, other.columns)
            for value, bound in zip(column, upper))

    def __check_shape(self, other: "Tabloid") -> None:
        if self.__shape != other.shape:
            raise ShapeError(Messages.SHAPE_MISMATCH.format(
                expected=list(self.__shape.parts),
                current=list(other.shape.parts)))

    def __getitem__(self, location: Types.Location) -> int:
        row, column = location
        if not self.__shape.contains(location):
            raise ShapeError(Messages.LOCATION_OUTSIDE_SHAPE.format(
                location=location, shape=list(self.__shape.parts)))
        return self.__columns[column - 1][row - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tabloid):
            return NotImplemented
        return (self.__shape == other.shape
                and self.__columns == other.columns)

    def __lt__(self, other: "Tabloid") -> bool:
        self.__check_shape(other)
        return self.__columns < other.columns

    def __hash__(self) -> int:
        return hash((self.__shape, self.__columns))

    def __repr__(self) -> str:
        return "Tabloid(%r, %s)" % (
            self.__shape, [list(column) for column in self.__columns])

    def __str__(self) -> str:
        return str([list(column) for column in self.__columns])


def is_tableau(tabloid: Tabloid) -> bool:
    return tabloid.is_tableau


def dominance_leq(tabloid: Tabloid, other: Tabloid) -> bool:
    return tabloid.dominated_by(other)


def total_less(tabloid: Tabloid, other: Tabloid) -> bool:
    """Returns True if T strictly precedes U in the total order."""
    return tabloid < other
