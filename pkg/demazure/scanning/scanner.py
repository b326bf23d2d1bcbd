from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, List, Mapping, Sequence, Tuple

from demazure.exceptions.exceptions import ShapeError
from demazure.exceptions.messages import Messages
from demazure.tableaux.tabloid import Tabloid
from demazure.types.types import Types


@dataclass(frozen=True)
class ScanResult:
    """Represents the output of the scanning algorithm.

    Attributes:
    -----------
        scan_tableau (Tabloid): The scanning tableau S(T).
        paths (Mapping[Types.Location, Tuple[Types.Location, ...]]): The 
            read-only scanning path P(T; r, c) that filled each location (r, c).
    """
    scan_tableau: Tabloid
    paths: Mapping[Types.Location, Tuple[Types.Location, ...]]

    def path(self, row: int, column: int) -> Tuple[Types.Location, ...]:
        return self.paths[(row, column)]


def ewis(sequence: Sequence[int]) -> Tuple[int, ...]:
    """Finds the earliest weakly increasing subsequence of a sequence.

    Parameters:
    -----------
        sequence (Sequence[int]): The values b_1, b_2, ...

    Returns:
    --------
        Tuple[int, ...]: The 1-based indices i_1 = 1 < i_2 < ... where 
            each i_j is the smallest index whose value is at least the 
            value at i_{j-1}.

    Raises:
    -------
        ShapeError: If the sequence is empty.
    """
    if not sequence:
        raise ShapeError(Messages.EMPTY_SEQUENCE)
    indices: List[int] = [1]
    for index, value in enumerate(sequence[1:], 2):
        if value >= sequence[indices[-1] - 1]:
            indices.append(index)
    return tuple(indices)


@lru_cache(maxsize=4096)
def scan(tableau: Tabloid) -> ScanResult:
    """Runs the scanning algorithm on a tableau.

    Column c of S(T) is filled bottom to top. Each pass reads the 
    bottom values of the unmarked part of columns c, c + 1, ... of T, 
    marks the locations of their EWIS, and writes the last EWIS value.

    Parameters:
    -----------
        tableau (Tabloid): A semistandard tableau T.

    Returns:
    --------
        ScanResult: S(T) together with every scanning path.

    Raises:
    -------
        ShapeError: If T is not a tableau.
    """
    if (violation := tableau.row_violation()) is not None:
        raise ShapeError(Messages.NOT_A_TABLEAU.format(
            tabloid=tableau, row=violation[0]))
    shape = tableau.shape
    columns: List[List[int]] = []
    paths: Dict[Types.Location, Tuple[Types.Location, ...]] = {}
    for column in range(1, shape.width + 1):
        heights: List[int] = [
            shape.column_length(c) for c in range(column, shape.width + 1)]
        filled: List[int] = []
        for row in range(shape.column_length(column), 0, -1):
            bottoms: List[Types.Location] = [
                (height, offset)
                for offset, height in enumerate(heights, column) if height]
            chosen = ewis([tableau[location] for location in bottoms])
            path = tuple(bottoms[index - 1] for index in chosen)
            for _, c in path:
                heights[c - column] -= 1
            paths[(row, column)] = path
            filled.append(tableau[path[-1]])
        columns.append(filled[::-1])
    return ScanResult(Tabloid(shape, columns), MappingProxyType(paths))
