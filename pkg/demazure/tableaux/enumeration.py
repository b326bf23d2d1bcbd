from itertools import combinations, product
from typing import Iterator, Tuple

from demazure.tableaux.partition import Partition
from demazure.tableaux.tabloid import Tabloid
from demazure.types.types import Types


def enumerate_tabloids(shape: Partition) -> Tuple[Tabloid, ...]:
    """Lists every tabloid of a shape, sorted by the total order.

    Parameters:
    -----------
        shape (Partition): The shape to fill.

    Returns:
    --------
        Tuple[Tabloid, ...]: All column-strict fillings with values in [n].
    """
    values = range(1, shape.n + 1)
    return tuple(
        Tabloid(shape, columns) for columns in product(*(
            combinations(values, length) for length in shape.column_lengths)))


def enumerate_tableaux(shape: Partition) -> Tuple[Tabloid, ...]:
    """Lists every semistandard tableau of a shape, sorted by the total 
    order. The empty shape has exactly one (empty) tableau.

    Parameters:
    -----------
        shape (Partition): The shape to fill.

    Returns:
    --------
        Tuple[Tabloid, ...]: The tableaux, each exactly once.
    """
    values = range(1, shape.n + 1)
    lengths: Types.Column = shape.column_lengths

    def fill(index: int, previous: Types.Column) -> Iterator[Types.Columns]:
        if index == len(lengths):
            yield ()
            return
        for column in combinations(values, lengths[index]):
            if all(value >= left for value, left in zip(column, previous)):
                for rest in fill(index + 1, column):
                    yield (column,) + rest

    return tuple(Tabloid(shape, columns) for columns in fill(0, ()))
