from typing import Final, Iterable, List, Sequence, Tuple

from typing_extensions import Self

from demazure.chains.qset import QSet
from demazure.exceptions.exceptions import ChainError
from demazure.exceptions.messages import Messages
from demazure.tableaux.partition import Partition
from demazure.tableaux.tabloid import Tabloid
from demazure.types.types import Types


class QChain:
    """Represents a Q-chain P_1 < P_2 < ... < P_k of subsets of [n] 
    with |P_j| = q_j.

    Attributes:
    -----------
        STRING (Final[str]): A string template for the string 
            representation of the QChain object.
    """

    STRING: Final[str] = "<QChain n=%d, q=%s, sets=%s>"

    def __init__(self, qset: QSet, sets: Sequence[Iterable[int]]) -> None:
        """Initializes a QChain object.

        Parameters:
        -----------
            qset (QSet): The set Q indexing the chain.
            sets (Sequence[Iterable[int]]): The sets P_1, ..., P_k.

        Raises:
        -------
            ChainError: If the cardinalities do not match Q, a value is 
                outside [1, n], or the sets are not nested.
        """
        sets = tuple(tuple(sorted(set(int(v) for v in s))) for s in sets)
        if len(sets) != qset.k:
            raise ChainError(Messages.CHAIN_LENGTH_MISMATCH.format(
                q=list(qset.q), expected=qset.k, current=len(sets)))
        for index, (values, size) in enumerate(zip(sets, qset.q), 1):
            if len(values) != size:
                raise ChainError(Messages.CHAIN_CARDINALITY.format(
                    index=index, expected=size, current=len(values)))
            for value in values:
                if not 1 <= value <= qset.n:
                    raise ChainError(Messages.CHAIN_VALUE_OUT_OF_RANGE.format(
                        value=value, n=qset.n))
        for index, (lower, upper) in enumerate(zip(sets, sets[1:]), 1):
            if not set(lower) <= set(upper):
                raise ChainError(Messages.CHAIN_NOT_NESTED.format(
                    index=index, next=index + 1))
        self.__qset: QSet = qset
        self.__sets: Tuple[Types.Column, ...] = sets

    @classmethod
    def from_sets(cls, n: int, sets: Sequence[Iterable[int]]) -> Self:
        """Builds a chain, inferring Q from the cardinalities of the sets."""
        sets = [sorted(set(s)) for s in sets]
        return cls(QSet(n, [len(s) for s in sets]), sets)

    @classmethod
    def minimal(cls, qset: QSet) -> Self:
        """Returns the minimal chain ({1..q_1}, ..., {1..q_k})."""
        return cls(qset, [range(1, q + 1) for q in qset.q])

    @classmethod
    def maximal(cls, qset: QSet) -> Self:
        """Returns the maximal chain P_j = {n - q_j + 1, ..., n}."""
        return cls(qset, [range(qset.n - q + 1, qset.n + 1) for q in qset.q])

    @property
    def qset(self) -> QSet:
        return self.__qset

    @property
    def n(self) -> int:
        return self.__qset.n

    @property
    def sets(self) -> Tuple[Types.Column, ...]:
        """Returns the sets P_1, ..., P_k, each sorted."""
        return self.__sets

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QChain):
            return NotImplemented
        return self.__qset == other.qset and self.__sets == other.sets

    def __hash__(self) -> int:
        return hash((self.__qset, self.__sets))

    def __repr__(self) -> str:
        return "QChain(%r, %s)" % (
            self.__qset, [list(s) for s in self.__sets])

    def __str__(self) -> str:
        return self.STRING % (
            self.n, list(self.__qset.q), [list(s) for s in self.__sets])


def key_of(chain: QChain) -> Tabloid:
    """Builds the key Y(pi): the columns Y(P_k), ..., Y(P_1) juxtaposed.

    Parameters:
    -----------
        chain (QChain): The chain pi.

    Returns:
    --------
        Tabloid: The key, a tableau with one column per set of the chain.
    """
    shape = Partition.from_column_lengths(chain.n, chain.qset.q)
    return Tabloid(shape, chain.sets[::-1])


def lambda_key(shape: Partition, chain: QChain) -> Tabloid:
    """Builds the lambda-key Y_lambda(pi).

    Each column of length q_j is Y(P_j) and each column of length n 
    is Y([n]).

    Parameters:
    -----------
        shape (Partition): The shape lambda, with Q(lambda) inside Q.
        chain (QChain): The chain pi.

    Returns:
    --------
        Tabloid: The lambda-key, a tableau of shape lambda.

    Raises:
    -------
        ChainError: If Q(lambda) is not contained in Q, or the sizes differ.
    """
    if shape.n != chain.n:
        raise ChainError(Messages.QSET_MISMATCH.format(
            expected=chain.n, current=shape.n))
    if not chain.qset.covers(shape):
        raise ChainError(Messages.SHAPE_NOT_COVERED.format(
            lengths=list(shape.q_set), q=list(chain.qset.q)))
    by_length = dict(zip(chain.qset.q, chain.sets))
    by_length[chain.n] = tuple(range(1, chain.n + 1))
    return Tabloid(
        shape, [by_length[length] for length in shape.column_lengths])


def chain_to_qperm(chain: QChain) -> Types.Permutation:
    """Lists P_1, P_2 - P_1, ..., [n] - P_k, each increasing.

    Parameters:
    -----------
        chain (QChain): The chain pi.

    Returns:
    --------
        Types.Permutation: The Q-permutation of pi in one-line form.
    """
    previous: set = set()
    perm: List[int] = []
    for values in chain.sets + (tuple(range(1, chain.n + 1)),):
        perm.extend(sorted(set(values) - previous))
        previous = set(values)
    return tuple(perm)


def qperm_to_chain(qset: QSet, perm: Sequence[int]) -> QChain:
    """Reads a chain off the carrels of a Q-permutation.

    Parameters:
    -----------
        qset (QSet): The set Q cutting the tuple into carrels.
        perm (Sequence[int]): A permutation of [n] increasing within 
            each carrel.

    Returns:
    --------
        QChain: The chain whose j-th set is the first q_j entries.

    Raises:
    -------
        ChainError: If perm is not a Q-permutation.
    """
    perm = tuple(int(value) for value in perm)
    error = Messages.QPERM_INVALID.format(
        perm=list(perm), n=qset.n, q=list(qset.q))
    if sorted(perm) != list(range(1, qset.n + 1)):
        raise ChainError(error)
    for carrel in qset.carrels:
        values = [perm[position - 1] for position in carrel]
        if values != sorted(values):
            raise ChainError(error)
    return QChain(qset, [perm[:q] for q in qset.q])


def is_qperm(qset: QSet, perm: Sequence[int]) -> bool:
    try:
        qperm_to_chain(qset, perm)
    except ChainError:
        return False
    return True


def reflect(chain: QChain, i: int, j: int) -> QChain:
    """Applies the reflection sigma_ij to every set of a chain.

    A set holding exactly one of i and j trades it for the other; 
    every other set is unchanged.

    Parameters:
    -----------
        chain (QChain): The chain pi.
        i (int): The smaller index.
        j (int): The larger index.

    Returns:
    --------
        QChain: The chain sigma_ij pi.

    Raises:
    -------
        ChainError: Unless 1 <= i < j <= n.
    """
    if not 1 <= i < j <= chain.n:
        raise ChainError(Messages.REFLECTION_INDICES.format(
            n=chain.n, i=i, j=j))
    sets: List[set] = []
    for values in map(set, chain.sets):
        if (i in values) != (j in values):
            values ^= {i, j}
        sets.append(values)
    return QChain(chain.qset, sets)
