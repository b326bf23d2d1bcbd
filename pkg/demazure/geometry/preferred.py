import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, List, Optional, Sequence, Tuple

from demazure.chains.qchain import QChain, qperm_to_chain
from demazure.chains.qset import QSet
from demazure.exceptions.exceptions import MatrixError
from demazure.exceptions.messages import Messages
from demazure.linalg.rational_matrix import RationalMatrix
from demazure.linalg.sampling import MatrixSampler
from demazure.types.types import Types


_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColumnOperation:
    """Represents an elementary column operation preserving a Q-flag.

    Attributes:
    -----------
        kind (str): One of SWAP, SCALE or ADD.
        source (int): The column swapped, scaled, or added from.
        target (int): The other swapped column, the scaled column, or
            the column added to.
        factor (Fraction): The scalar of a SCALE or ADD operation.
    """
    kind: str
    source: int
    target: int
    factor: Fraction = Fraction(1)

    SWAP: ClassVar[str] = "swap"
    SCALE: ClassVar[str] = "scale"
    ADD: ClassVar[str] = "add"

    def is_valid(self, qset: QSet) -> bool:
        """Checks that the operation keeps the Q-flag of any basis."""
        if not (1 <= self.source <= qset.n and 1 <= self.target <= qset.n):
            return False
        if self.kind == self.SWAP:
            return qset.carrel_of(self.source) == qset.carrel_of(self.target)
        if self.kind == self.SCALE:
            return self.source == self.target and self.factor != 0
        if self.kind == self.ADD:
            return self.source < self.target
        return False


class ColumnWorkspace:
    """Holds the columns of a basis under elimination and logs every
    operation applied to them."""

    def __init__(self, matrix: RationalMatrix) -> None:
        self.__columns: List[List[Fraction]] = [
            list(matrix.column(j)) for j in range(1, matrix.column_count + 1)]
        self.__log: List[ColumnOperation] = []

    @property
    def operations(self) -> Tuple[ColumnOperation, ...]:
        return tuple(self.__log)

    def pivot(self, column: int) -> int:
        """Returns the last nonzero coordinate of a column, or 0."""
        values = self.__columns[column - 1]
        return next((
            row for row in range(len(values), 0, -1) if values[row - 1]), 0)

    def entry(self, row: int, column: int) -> Fraction:
        return self.__columns[column - 1][row - 1]

    def swap(self, first: int, second: int) -> None:
        if first == second:
            return
        self.__columns[first - 1], self.__columns[second - 1] = (
            self.__columns[second - 1], self.__columns[first - 1])
        self.__log.append(ColumnOperation(ColumnOperation.SWAP, first, second))

    def scale(self, column: int, factor: Fraction) -> None:
        if factor == 1:
            return
        self.__columns[column - 1] = [
            value * factor for value in self.__columns[column - 1]]
        self.__log.append(
            ColumnOperation(ColumnOperation.SCALE, column, column, factor))

    def add(self, source: int, target: int, factor: Fraction) -> None:
        if not factor:
            return
        self.__columns[target - 1] = [
            value + factor * other for value, other in zip(
                self.__columns[target - 1], self.__columns[source - 1])]
        self.__log.append(
            ColumnOperation(ColumnOperation.ADD, source, target, factor))

    def clear_row(self, column: int) -> None:
        """Zeroes the pivot row of a column in every column to its right."""
        row = self.pivot(column)
        for other in range(column + 1, len(self.__columns) + 1):
            if value := self.entry(row, other):
                self.add(column, other, -value / self.entry(row, column))

    def normalize(self, column: int) -> None:
        """Scales a column so that its pivot entry is 1."""
        self.scale(column, 1 / self.entry(self.pivot(column), column))

    def matrix(self) -> RationalMatrix:
        return RationalMatrix(list(zip(*self.__columns)))


@dataclass(frozen=True)
class QPreferredBasis:
    """Represents the Q-preferred representative of a Q-flag.

    Attributes:
    -----------
        matrix (RationalMatrix): The Q-preferred basis f.
        pivots (Types.Permutation): The pivot coordinates rho_1..rho_n.
        chain (QChain): The chain read off the pivots, i.e. the Bruhat
            cell of the flag.
        operations (Tuple[ColumnOperation, ...]): The column operations
            that produced f from the input basis.
    """
    matrix: RationalMatrix
    pivots: Types.Permutation
    chain: QChain
    operations: Tuple[ColumnOperation, ...]


class PivotPolicy(ABC):
    """An abstract class representing an order of Gaussian elimination
    steps that produces the Q-preferred basis."""

    @abstractmethod
    def eliminate(self, workspace: ColumnWorkspace, carrel: Sequence[int]) -> None:
        """Brings one carrel into Q-preferred form.

        Columns left of the carrel are already in final form, and their
        pivot rows are zero in the carrel.

        Parameters:
        -----------
            workspace (ColumnWorkspace): The columns under elimination.
            carrel (Sequence[int]): The positions of the carrel.
        """
        pass

    def reduce(self, matrix: RationalMatrix, qset: QSet) -> QPreferredBasis:
        """Runs the elimination on an invertible basis.

        Parameters:
        -----------
            matrix (RationalMatrix): The n x n basis h.
            qset (QSet): The set Q.

        Returns:
        --------
            QPreferredBasis: The Q-preferred basis of the flag of h.

        Raises:
        -------
            MatrixError: If h is not square of size n or is singular.
        """
        if not matrix.is_square or matrix.row_count != qset.n:
            raise MatrixError(Messages.MATRIX_DIMENSION.format(
                expected=qset.n, current=matrix.row_count))
        if not matrix.determinant():
            raise MatrixError(Messages.MATRIX_SINGULAR)
        workspace = ColumnWorkspace(matrix)
        for carrel in qset.carrels:
            self.eliminate(workspace, carrel)
        pivots = tuple(workspace.pivot(j) for j in range(1, qset.n + 1))
        _logger.debug(
            "%s reduced a basis in %d operations, pivots %s",
            type(self).__name__, len(workspace.operations), pivots)
        return QPreferredBasis(
            workspace.matrix(), pivots, qperm_to_chain(qset, pivots),
            workspace.operations)


class DescendingPivotPolicy(PivotPolicy):
    """Moves the largest pivot of the carrel to the front and clears its
    row to the right, reverses the carrel, then normalizes."""

    def eliminate(self, workspace: ColumnWorkspace, carrel: Sequence[int]) -> None:
        for position in carrel:
            chosen = max(
                (column for column in carrel if column >= position),
                key=lambda column: (workspace.pivot(column), -column))
            workspace.swap(position, chosen)
            workspace.clear_row(position)
        self._finish(workspace, carrel, reverse=True)

    def _finish(
            self, workspace: ColumnWorkspace, carrel: Sequence[int],
            reverse: bool
        ) -> None:
        if reverse:
            for offset in range(len(carrel) // 2):
                workspace.swap(carrel[offset], carrel[-1 - offset])
        for position in carrel:
            workspace.normalize(position)
            workspace.clear_row(position)


class AscendingPivotPolicy(DescendingPivotPolicy):
    """Eliminates repeated pivots inside the carrel, sorts the carrel by
    increasing pivot, then normalizes and clears rows to the right."""

    def eliminate(self, workspace: ColumnWorkspace, carrel: Sequence[int]) -> None:
        while (tie := self.__find_tie(workspace, carrel)) is not None:
            left, right = tie
            row = workspace.pivot(left)
            workspace.add(left, right, -workspace.entry(row, right)
                          / workspace.entry(row, left))
        for position in carrel:
            chosen = min(
                (column for column in carrel if column >= position),
                key=lambda column: (workspace.pivot(column), column))
            workspace.swap(position, chosen)
        self._finish(workspace, carrel, reverse=False)

    @staticmethod
    def __find_tie(
            workspace: ColumnWorkspace, carrel: Sequence[int]
        ) -> Optional[Tuple[int, int]]:
        seen = {}
        for column in carrel:
            if (pivot := workspace.pivot(column)) in seen:
                return seen[pivot], column
            seen[pivot] = column
        return None


def q_preferred_reduce(
        matrix: RationalMatrix, qset: QSet,
        policy: Optional[PivotPolicy] = None
    ) -> QPreferredBasis:
    """Computes the Q-preferred basis of the flag of an invertible matrix.

    Parameters:
    -----------
        matrix (RationalMatrix): The basis h.
        qset (QSet): The set Q.
        policy (Optional[PivotPolicy]): The elimination order.
            Defaults to None, the DescendingPivotPolicy.

    Returns:
    --------
        QPreferredBasis: The unique Q-preferred basis f with the same
            Q-flag, its pivots and its cell.
    """
    return (policy or DescendingPivotPolicy()).reduce(matrix, qset)


def pivots_of(matrix: RationalMatrix) -> Tuple[int, ...]:
    """Returns the pivot coordinate of every column, 0 for a zero column."""
    return tuple(
        ColumnWorkspace(matrix).pivot(j)
        for j in range(1, matrix.column_count + 1))


def is_q_preferred(matrix: RationalMatrix, qset: QSet) -> bool:
    """Checks the three properties of a Q-preferred basis: pivots
    increase down the rows within each carrel, every pivot entry is 1,
    and every pivot row is zero to the right of its pivot."""
    if not matrix.is_square or matrix.row_count != qset.n:
        return False
    pivots = pivots_of(matrix)
    if 0 in pivots:
        return False
    for carrel in qset.carrels:
        values = [pivots[position - 1] for position in carrel]
        if any(upper >= lower for upper, lower in zip(values, values[1:])):
            return False
    for column, row in enumerate(pivots, 1):
        if matrix[(row, column)] != 1:
            return False
        if any(matrix[(row, other)] for other in range(column + 1, qset.n + 1)):
            return False
    return True


def free_entries(basis: QPreferredBasis) -> Tuple[Types.Location, ...]:
    """Lists the entries of a Q-preferred basis left unconstrained by
    the three properties: rows above the pivot of a column that are not
    the pivot row of an earlier column."""
    pivots = basis.pivots
    return tuple(
        (row, column)
        for column, pivot in enumerate(pivots, 1)
        for row in range(1, pivot)
        if row not in pivots[:column - 1])


def apply_operations(
        matrix: RationalMatrix, operations: Sequence[ColumnOperation],
        qset: QSet
    ) -> RationalMatrix:
    """Replays a log of column operations on a basis.

    Raises:
    -------
        MatrixError: If an operation does not preserve the Q-flag.
    """
    workspace = ColumnWorkspace(matrix)
    for operation in operations:
        if not operation.is_valid(qset):
            raise MatrixError(
                Messages.INVALID_OPERATION.format(operation=operation))
        if operation.kind == ColumnOperation.SWAP:
            workspace.swap(operation.source, operation.target)
        elif operation.kind == ColumnOperation.SCALE:
            workspace.scale(operation.target, operation.factor)
        else:
            workspace.add(operation.source, operation.target, operation.factor)
    return workspace.matrix()


def random_carrel_operations(
        qset: QSet, sampler: MatrixSampler, count: int
    ) -> Tuple[ColumnOperation, ...]:
    """Draws a random log of flag-preserving column operations."""
    operations: List[ColumnOperation] = []
    kinds = [ColumnOperation.SWAP, ColumnOperation.SCALE, ColumnOperation.ADD]
    while len(operations) < count:
        kind = sampler.choice(kinds)
        source = sampler.choice(list(range(1, qset.n + 1)))
        if kind == ColumnOperation.SWAP:
            carrel = qset.carrels[qset.carrel_of(source)]
            target = sampler.choice(list(carrel))
            factor = Fraction(1)
        elif kind == ColumnOperation.SCALE:
            target, factor = source, Fraction(sampler.nonzero_entry())
        else:
            if source == qset.n:
                continue
            target = sampler.choice(list(range(source + 1, qset.n + 1)))
            factor = Fraction(sampler.entry())
        operations.append(ColumnOperation(kind, source, target, factor))
    return tuple(operations)
