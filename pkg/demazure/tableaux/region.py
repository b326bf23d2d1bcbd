from typing import Final, FrozenSet, Iterable, Iterator, Tuple

from demazure.exceptions.exceptions import ShapeError
from demazure.exceptions.messages import Messages
from demazure.tableaux.partition import Partition
from demazure.types.types import Types


class Region:
    """Represents a set of locations inside a shape.

    Iteration visits the locations column by column, top to bottom.
    """

    STRING: Final[str] = "<Region %s>"

    def __init__(
            self, shape: Partition, locations: Iterable[Types.Location]
        ) -> None:
        """Initializes a Region object.

        Parameters:
        -----------
            shape (Partition): The shape containing the region.
            locations (Iterable[Types.Location]): The (row, column) pairs.

        Raises:
        -------
            ShapeError: If a location lies outside the shape.
        """
        locations = frozenset((int(r), int(c)) for r, c in locations)
        for location in locations:
            if not shape.contains(location):
                raise ShapeError(Messages.LOCATION_OUTSIDE_SHAPE.format(
                    location=location, shape=list(shape.parts)))
        self.__shape: Partition = shape
        self.__locations: FrozenSet[Types.Location] = locations

    @property
    def shape(self) -> Partition:
        return self.__shape

    @property
    def locations(self) -> FrozenSet[Types.Location]:
        return self.__locations

    @property
    def columns(self) -> Tuple[int, ...]:
        """Returns the columns meeting the region, left to right."""
        return tuple(sorted({column for _, column in self.__locations}))

    def rows_in(self, column: int) -> Tuple[int, ...]:
        """Returns the rows of the region in a column, top to bottom.

        Parameters:
        -----------
            column (int): The column index c.

        Returns:
        --------
            Tuple[int, ...]: The rows of mu_c in increasing order.
        """
        return tuple(sorted(
            row for row, other in self.__locations if other == column))

    def rows_outside(self, column: int) -> Tuple[int, ...]:
        """Returns the rows of the complementary region in a column."""
        inside = set(self.rows_in(column))
        return tuple(
            row for row in range(1, self.__shape.column_length(column) + 1)
            if row not in inside)

    def __contains__(self, location: object) -> bool:
        return location in self.__locations

    def __iter__(self) -> Iterator[Types.Location]:
        return iter(sorted(self.__locations, key=lambda rc: (rc[1], rc[0])))

    def __len__(self) -> int:
        return len(self.__locations)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Region):
            return NotImplemented
        return (self.__shape == other.shape
                and self.__locations == other.locations)

    def __hash__(self) -> int:
        return hash((self.__shape, self.__locations))

    def __repr__(self) -> str:
        return self.STRING % (list(self),)
