import logging
from bisect import bisect_left
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

from demazure.chains.qchain import QChain, key_of, reflect
from demazure.chains.qset import QSet
from demazure.exceptions.exceptions import ChainError
from demazure.exceptions.messages import Messages


_logger = logging.getLogger(__name__)


def bruhat_leq(chain: QChain, other: QChain) -> bool:
    """Compares two chains in the Bruhat order, rho <= pi iff 
    Y(rho) <= Y(pi) entrywise.

    Raises:
    -------
        ChainError: If the chains are built on different Q-sets.
    """
    if chain.qset != other.qset:
        raise ChainError(Messages.QSET_MISMATCH.format(
            expected=other.qset, current=chain.qset))
    return key_of(chain).dominated_by(key_of(other))


def step_down(target: QChain, source: QChain) -> Tuple[int, int]:
    """Finds a reflection stepping down from `source` towards `target`.

    The rightmost differing key column is Y(R_h) against Y(P_h); then 
    i is the least element of R_h - P_h and j the least element of 
    P_h - R_h.

    Parameters:
    -----------
        target (QChain): The lower chain rho.
        source (QChain): The chain pi with rho < pi.

    Returns:
    --------
        Tuple[int, int]: The pair (i, j) with 
            rho <= sigma_ij pi < pi.

    Raises:
    -------
        ChainError: If rho < pi does not hold.
    """
    if target == source or not bruhat_leq(target, source):
        raise ChainError(Messages.NOT_STRICTLY_BELOW.format(
            target=target, source=source))
    # The key lists P_k first, so its rightmost column is P_1.
    h = next(index for index, (lower, upper) in enumerate(
        zip(target.sets, source.sets)) if lower != upper)
    lower, upper = set(target.sets[h]), set(source.sets[h])
    return min(lower - upper), min(upper - lower)


def descent_path(target: QChain, source: QChain) -> Tuple[QChain, ...]:
    """Iterates step_down from `source` until `target` is reached.

    Returns:
    --------
        Tuple[QChain, ...]: The chains source = pi_0 > pi_1 > ... = target.
    """
    if not bruhat_leq(target, source):
        raise ChainError(Messages.NOT_STRICTLY_BELOW.format(
            target=target, source=source))
    path: List[QChain] = [source]
    while path[-1] != target:
        i, j = step_down(target, path[-1])
        path.append(reflect(path[-1], i, j))
        _logger.debug("Stepped down by (%d, %d) to %s", i, j, path[-1])
    return tuple(path)


def enumerate_chains(qset: QSet) -> Tuple[QChain, ...]:
    """Lists every Q-chain, in lexicographic order of their sets.

    Parameters:
    -----------
        qset (QSet): The set Q.

    Returns:
    --------
        Tuple[QChain, ...]: All chains for Q.
    """
    universe = range(1, qset.n + 1)

    def extend(index: int, previous: Tuple[int, ...]) -> Iterator[tuple]:
        if index == qset.k:
            yield ()
            return
        rest = [value for value in universe if value not in previous]
        for added in combinations(rest, qset.q[index] - len(previous)):
            current = tuple(sorted(previous + added))
            for tail in extend(index + 1, current):
                yield (current,) + tail

    return tuple(QChain(qset, sets) for sets in sorted(extend(0, ())))


def chains_below(chain: QChain) -> Tuple[QChain, ...]:
    """Lists every chain rho with rho <= pi, pi included."""
    return tuple(
        other for other in enumerate_chains(chain.qset)
        if bruhat_leq(other, chain))


def lower_chain(chain: QChain, column: Sequence[int]) -> QChain:
    """Builds the chain rho determined by a column Y(R_h) below Y(P_h).

    For j <= h the set R_j holds the q_j smallest values of the column. 
    For j > h the set R_j evolves from P_j: for each value r of the 
    column in increasing order, the smallest element of P_j that is 
    at least r is replaced by r.

    Parameters:
    -----------
        chain (QChain): The chain pi.
        column (Sequence[int]): The column Y(R_h), with |R_h| = q_h in Q.

    Returns:
    --------
        QChain: The chain rho, which satisfies rho <= pi and has 
            Y(R_h) as the rightmost column of its lambda-keys.

    Raises:
    -------
        ChainError: If |R_h| is not in Q or Y(R_h) is not below Y(P_h).
    """
    column = sorted(column)
    if len(column) not in chain.qset.q:
        raise ChainError(Messages.SHAPE_NOT_COVERED.format(
            lengths=[len(column)], q=list(chain.qset.q)))
    h = chain.qset.q.index(len(column))
    bound = chain.sets[h]
    if len(set(column)) != len(column) or any(
            value > limit for value, limit in zip(column, bound)):
        raise ChainError(Messages.COLUMN_NOT_BELOW.format(
            column=column, index=h + 1, bound=list(bound)))
    sets: List[List[int]] = [column[:q] for q in chain.qset.q[:h + 1]]
    for values in chain.sets[h + 1:]:
        evolved = list(values)
        for value in column:
            evolved[bisect_left(evolved, value)] = value
        sets.append(evolved)
    return QChain(chain.qset, sets)
