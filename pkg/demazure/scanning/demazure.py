from typing import Tuple

from demazure.chains.qchain import QChain, lambda_key
from demazure.exceptions.exceptions import ChainError
from demazure.exceptions.messages import Messages
from demazure.scanning.scanner import scan
from demazure.tableaux.enumeration import enumerate_tableaux
from demazure.tableaux.partition import Partition
from demazure.tableaux.tabloid import Tabloid
from demazure.types.types import Types


def is_demazure(tableau: Tabloid, chain: QChain) -> bool:
    """Checks whether a tableau is pi-Demazure, i.e. S(T) <= Y_lambda(pi).

    Parameters:
    -----------
        tableau (Tabloid): A tableau T.
        chain (QChain): The chain pi, with Q(lambda) inside Q.

    Returns:
    --------
        bool: True if the scanning tableau is dominated by the lambda-key.
    """
    bound = lambda_key(tableau.shape, chain)
    return scan(tableau).scan_tableau.dominated_by(bound)


def demazure_violations(
        tableau: Tabloid, chain: QChain) -> Tuple[Types.Location, ...]:
    """Lists the locations where S(T) exceeds Y_lambda(pi).

    Returns:
    --------
        Tuple[Types.Location, ...]: The violations, column by column 
            and top to bottom within a column.
    """
    bound = lambda_key(tableau.shape, chain)
    result = scan(tableau).scan_tableau
    return tuple(
        location for location in tableau.shape.locations
        if result[location] > bound[location])


def enumerate_demazure(
        shape: Partition, chain: QChain) -> Tuple[Tabloid, ...]:
    """Lists the pi-Demazure tableaux of a shape in total order.

    Raises:
    -------
        ChainError: If Q(lambda) is not contained in Q.
    """
    if not chain.qset.covers(shape):
        raise ChainError(Messages.SHAPE_NOT_COVERED.format(
            lengths=list(shape.q_set), q=list(chain.qset.q)))
    bound = lambda_key(shape, chain)
    return tuple(
        tableau for tableau in enumerate_tableaux(shape)
        if scan(tableau).scan_tableau.dominated_by(bound))
