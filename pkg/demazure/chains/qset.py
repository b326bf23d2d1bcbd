from itertools import combinations
from typing import Final, Iterable, Tuple

from demazure.exceptions.exceptions import ChainError
from demazure.exceptions.messages import Messages
from demazure.tableaux.partition import Partition


class QSet:
    """Represents a nonempty subset Q = {q_1 < ... < q_k} of [n - 1].

    Attributes:
    -----------
        STRING (Final[str]): A string template for the string 
            representation of the QSet object.
    """

    STRING: Final[str] = "<QSet n=%d, q=%s>"

    def __init__(self, n: int, q: Iterable[int]) -> None:
        """Initializes a QSet object.

        Parameters:
        -----------
            n (int): The size of the ambient set [n].
            q (Iterable[int]): The strictly increasing elements of Q.

        Raises:
        -------
            ChainError: If Q is empty, unsorted, or not inside [1, n - 1].
        """
        q = tuple(int(value) for value in q)
        if (n < 2 or not q or q[0] < 1 or q[-1] > n - 1
                or any(lower >= upper for lower, upper in zip(q, q[1:]))):
            raise ChainError(Messages.QSET_INVALID.format(
                bound=n - 1, q=list(q)))
        self.__n: int = n
        self.__q: Tuple[int, ...] = q

    @property
    def n(self) -> int:
        return self.__n

    @property
    def q(self) -> Tuple[int, ...]:
        """Returns q_1 < ... < q_k."""
        return self.__q

    @property
    def k(self) -> int:
        return len(self.__q)

    @property
    def carrels(self) -> Tuple[Tuple[int, ...], ...]:
        """Returns the k + 1 Q-carrels of an n-tuple.

        Returns:
        --------
            Tuple[Tuple[int, ...], ...]: The 1-based positions of each 
                carrel: the first q_1 positions, the next q_2 - q_1 
                positions, and so on through the last n - q_k positions.
        """
        bounds = (0,) + self.__q + (self.__n,)
        return tuple(
            tuple(range(start + 1, stop + 1))
            for start, stop in zip(bounds, bounds[1:]))

    def carrel_of(self, position: int) -> int:
        """Returns the 0-based index of the carrel holding a position."""
        return sum(1 for value in self.__q if value < position)

    def covers(self, shape: Partition) -> bool:
        """Returns True if Q(lambda) is contained in Q."""
        return set(shape.q_set) <= set(self.__q)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSet):
            return NotImplemented
        return self.__n == other.n and self.__q == other.q

    def __hash__(self) -> int:
        return hash((self.__n, self.__q))

    def __repr__(self) -> str:
        return "QSet(%d, %s)" % (self.__n, list(self.__q))

    def __str__(self) -> str:
        return self.STRING % (self.__n, list(self.__q))


def all_qsets(n: int) -> Tuple[QSet, ...]:
    """Lists every nonempty Q contained in [n - 1], shortest first."""
    return tuple(
        QSet(n, q) for size in range(1, n)
        for q in combinations(range(1, n), size))
