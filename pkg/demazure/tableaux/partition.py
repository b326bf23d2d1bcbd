from typing import Final, Iterable, Sequence, Tuple

from typing_extensions import Self

from demazure.exceptions.exceptions import ShapeError
from demazure.exceptions.messages import Messages
from demazure.types.types import Types


class Partition:
    """Represents an n-partition and its shape.

    Attributes:
    -----------
        STRING (Final[str]): A string template for the string 
            representation of the Partition object.
    """

    STRING: Final[str] = "<Partition %s, n=%d>"

    def __init__(self, parts: Sequence[int]) -> None:
        """Initializes a Partition object.

        Parameters:
        -----------
            parts (Sequence[int]): The n weakly decreasing nonnegative 
                row lengths lambda_1 >= ... >= lambda_n.

        Raises:
        -------
            ShapeError: If there are fewer than 2 parts, or if the parts 
                are not weakly decreasing and nonnegative.
        """
        parts = tuple(int(part) for part in parts)
        if len(parts) < 2:
            raise ShapeError(Messages.PARTITION_TOO_SHORT.format(
                parts=list(parts)))
        if parts[-1] < 0 or any(
                upper < lower for upper, lower in zip(parts, parts[1:])):
            raise ShapeError(Messages.PARTITION_NOT_DECREASING.format(
                parts=list(parts)))
        self.__parts: Tuple[int, ...] = parts
        self.__column_lengths: Types.Column = tuple(
            sum(1 for part in parts if part >= column)
            for column in range(1, parts[0] + 1))

    @classmethod
    def from_column_lengths(
            cls, n: int, lengths: Iterable[int]) -> Self:
        """Builds the partition whose columns have the given lengths.

        Parameters:
        -----------
            n (int): The number of rows.
            lengths (Iterable[int]): The column lengths, in any order.

        Returns:
        --------
            Partition: The partition with those column lengths.
        """
        lengths = sorted(lengths, reverse=True)
        if lengths and (lengths[0] > n or lengths[-1] < 1):
            raise ShapeError(Messages.COLUMN_LENGTH_OUT_OF_RANGE.format(
                n=n, lengths=lengths))
        return cls(tuple(
            sum(1 for length in lengths if length >= row)
            for row in range(1, n + 1)))

    @property
    def parts(self) -> Tuple[int, ...]:
        """Returns the row lengths of the partition.

        Returns:
        --------
            Tuple[int, ...]: The row lengths lambda_1, ..., lambda_n.
        """
        return self.__parts

    @property
    def n(self) -> int:
        """Returns the number of rows n, which also bounds the values."""
        return len(self.__parts)

    @property
    def width(self) -> int:
        """Returns the number of columns lambda_1."""
        return self.__parts[0]

    @property
    def column_lengths(self) -> Types.Column:
        """Returns the column lengths zeta_1 >= ... >= zeta_{lambda_1}.

        Returns:
        --------
            Types.Column: The column lengths, left to right.
        """
        return self.__column_lengths

    @property
    def q_set(self) -> Tuple[int, ...]:
        """Returns Q(lambda), the distinct column lengths less than n.

        Returns:
        --------
            Tuple[int, ...]: The distinct lengths, in increasing order.
        """
        return tuple(sorted({
            length for length in self.__column_lengths if length < self.n}))

    @property
    def size(self) -> int:
        """Returns the number of boxes."""
        return sum(self.__parts)

    @property
    def locations(self) -> Tuple[Types.Location, ...]:
        """Returns every location (r, c) of the shape, column by column."""
        return tuple(
            (row, column)
            for column, length in enumerate(self.__column_lengths, 1)
            for row in range(1, length + 1))

    def column_length(self, column: int) -> int:
        """Returns zeta_c, or 0 when the column is outside the shape."""
        if 1 <= column <= self.width:
            return self.__column_lengths[column - 1]
        return 0

    def contains(self, location: Types.Location) -> bool:
        row, column = location
        return 1 <= row <= self.column_length(column)

    def without_last_column(self) -> "Partition":
        """Returns the shape obtained by omitting the rightmost column.

        Returns:
        --------
            Partition: The shape lambda', or the same empty shape.
        """
        return Partition.from_column_lengths(
            self.n, self.__column_lengths[:-1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.__parts == other.parts

    def __hash__(self) -> int:
        return hash(self.__parts)

    def __repr__(self) -> str:
        return "Partition(%s)" % (self.__parts,)

    def __str__(self) -> str:
        return self.STRING % (list(self.__parts), self.n)


def enumerate_partitions(n: int, size: int) -> Tuple[Partition, ...]:
    """Lists every n-partition with the given number of boxes.

    Parameters:
    -----------
        n (int): The number of rows.
        size (int): The number of boxes.

    Returns:
    --------
        Tuple[Partition, ...]: The partitions, in decreasing 
            lexicographic order of their parts.
    """
    def fill(remaining: int, rows: int, bound: int):
        if rows == 0:
            if remaining == 0:
                yield ()
            return
        for part in range(min(remaining, bound), -1, -1):
            for rest in fill(remaining - part, rows - 1, part):
                yield (part,) + rest

    return tuple(Partition(parts) for parts in fill(size, n, size))
