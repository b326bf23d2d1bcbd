from typing import List, Sequence

from demazure.chains.qchain import QChain
from demazure.characters.polynomial import Polynomial
from demazure.exceptions.exceptions import ChainError
from demazure.exceptions.messages import Messages
from demazure.scanning.demazure import enumerate_demazure
from demazure.tableaux.enumeration import enumerate_tableaux
from demazure.tableaux.partition import Partition
from demazure.tableaux.tabloid import Tabloid
from demazure.types.types import Types


def weight(tabloid: Tabloid) -> Types.Exponents:
    """Counts how many entries of a tabloid equal each of 1, ..., n."""
    counts: List[int] = [0] * tabloid.n
    for column in tabloid.columns:
        for value in column:
            counts[value - 1] += 1
    return tuple(counts)


def permuted_weight(shape: Partition, perm: Sequence[int]) -> Types.Exponents:
    """Returns w * lambda, the exponent vector with lambda_i at 
    position w_i.

    Raises:
    -------
        ChainError: If w is not a permutation of [n].
    """
    if sorted(perm) != list(range(1, shape.n + 1)):
        raise ChainError(Messages.NOT_A_PERMUTATION.format(
            perm=list(perm), n=shape.n))
    exponents: List[int] = [0] * shape.n
    for part, position in zip(shape.parts, perm):
        exponents[position - 1] = part
    return tuple(exponents)


def _character(shape: Partition, tableaux: Sequence[Tabloid]) -> Polynomial:
    total = Polynomial(shape.n)
    for tableau in tableaux:
        total += Polynomial.monomial(weight(tableau))
    return total


def key_polynomial(shape: Partition, chain: QChain) -> Polynomial:
    """Computes the Demazure character as the sum of y^T over the 
    pi-Demazure tableaux of a shape.

    Parameters:
    -----------
        shape (Partition): The shape lambda.
        chain (QChain): The chain pi, with Q(lambda) inside Q.

    Returns:
    --------
        Polynomial: The key polynomial.

    Raises:
    -------
        ChainError: If Q(lambda) is not contained in Q.
    """
    return _character(shape, enumerate_demazure(shape, chain))


def demazure_dimension(shape: Partition, chain: QChain) -> int:
    """Counts the pi-Demazure tableaux of a shape."""
    return len(enumerate_demazure(shape, chain))


def schur_polynomial(shape: Partition) -> Polynomial:
    """Computes the sum of y^T over all tableaux of a shape."""
    return _character(shape, enumerate_tableaux(shape))
