from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List, Tuple

from sympy.combinatorics import Permutation

from demazure.exceptions.exceptions import ShapeError
from demazure.exceptions.messages import Messages
from demazure.straightening.combination import LinearCombination
from demazure.tableaux.region import Region
from demazure.tableaux.tabloid import Tabloid
from demazure.types.types import Types


@dataclass(frozen=True)
class ShuffleTerm:
    """Represents one mu-shuffle sigma of a tabloid.

    Attributes:
    -----------
        sign (int): The sign epsilon(sigma) of sigma as a permutation.
        result (Tabloid): The tabloid T_sigma.
        identity (bool): Whether sigma is the identity shuffle.
    """
    sign: int
    result: Tabloid
    identity: bool


def check_region(tabloid: Tabloid, region: Region) -> None:
    if region.shape != tabloid.shape:
        raise ShapeError(Messages.SHAPE_MISMATCH.format(
            expected=list(tabloid.shape.parts),
            current=list(region.shape.parts)))


def _assignments(
        tabloid: Tabloid, region: Region
    ) -> Iterator[Dict[int, Tuple[Types.Location, ...]]]:
    """Yields each way of sending the locations of mu to the columns of 
    mu, column j receiving |mu_j| locations of distinct values that 
    avoid the values of T_j outside mu."""
    columns = region.columns
    quotas = {column: len(region.rows_in(column)) for column in columns}
    fixed = {
        column: {tabloid[(row, column)] for row in region.rows_outside(column)}
        for column in columns}

    def assign(index: int, pool: Tuple[Types.Location, ...]):
        if index == len(columns):
            yield {}
            return
        column = columns[index]
        for chosen in combinations(pool, quotas[column]):
            values = [tabloid[location] for location in chosen]
            if len(set(values)) < len(values) or fixed[column] & set(values):
                continue
            rest = tuple(location for location in pool if location not in chosen)
            for tail in assign(index + 1, rest):
                yield {column: chosen, **tail}

    yield from assign(0, tuple(region))


def mu_shuffles(tabloid: Tabloid, region: Region) -> Tuple[ShuffleTerm, ...]:
    """Lists every mu-shuffle of a tabloid with its sign and result.

    A shuffle permutes the values inside mu so that no column repeats a 
    value and then sorts every column. Terms are not merged: distinct 
    shuffles may produce equal tabloids.

    Parameters:
    -----------
        tabloid (Tabloid): The tabloid T.
        region (Region): The region mu inside the shape of T.

    Returns:
    --------
        Tuple[ShuffleTerm, ...]: One term per shuffle sigma.

    Raises:
    -------
        ShapeError: If the region belongs to another shape.
    """
    check_region(tabloid, region)
    locations: Tuple[Types.Location, ...] = tabloid.shape.locations
    index: Dict[Types.Location, int] = {
        location: position for position, location in enumerate(locations)}
    terms: List[ShuffleTerm] = []
    for assignment in _assignments(tabloid, region):
        origins: Dict[int, List[Types.Location]] = {
            column: [(row, column) for row in region.rows_outside(column)]
            for column in range(1, tabloid.shape.width + 1)}
        for column, chosen in assignment.items():
            origins[column].extend(chosen)
        target: List[int] = [0] * len(locations)
        columns: List[List[int]] = []
        for column in range(1, tabloid.shape.width + 1):
            ordered = sorted(origins[column], key=tabloid.__getitem__)
            for row, origin in enumerate(ordered, 1):
                target[index[origin]] = index[(row, column)]
            columns.append([tabloid[origin] for origin in ordered])
        sign = Permutation(target).signature() if target else 1
        identity = all(
            set(chosen) == {(row, column) for row in region.rows_in(column)}
            for column, chosen in assignment.items())
        terms.append(ShuffleTerm(sign, Tabloid(tabloid.shape, columns), identity))
    return tuple(terms)


def shuffle_sum(tabloid: Tabloid, region: Region) -> LinearCombination:
    """Merges the signed sum of all mu-shuffles into a combination."""
    total = LinearCombination(tabloid.shape)
    for term in mu_shuffles(tabloid, region):
        total = total + LinearCombination.of(term.result, term.sign)
    return total


def shuffle_relation(tabloid: Tabloid, region: Region) -> LinearCombination:
    """Solves the shuffle relation for T.

    Returns:
    --------
        LinearCombination: The combination -sum epsilon(sigma) T_sigma 
            over the non-identity shuffles, merged per tabloid.
    """
    total = LinearCombination(tabloid.shape)
    for term in mu_shuffles(tabloid, region):
        if not term.identity:
            total = total - LinearCombination.of(term.result, term.sign)
    return total
