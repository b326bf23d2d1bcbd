import logging
from typing import Optional, Union

from demazure.chains.qchain import QChain, lambda_key
from demazure.exceptions.exceptions import ChainError, ShapeError
from demazure.exceptions.messages import Messages
from demazure.scanning.demazure import is_demazure
from demazure.straightening.combination import LinearCombination
from demazure.straightening.regions import demazure_region, snake_region
from demazure.straightening.shuffles import shuffle_relation
from demazure.tableaux.tabloid import Tabloid
from demazure.types.types import Types


_logger = logging.getLogger(__name__)


def _as_combination(
        value: Union[Tabloid, LinearCombination]) -> LinearCombination:
    if isinstance(value, Tabloid):
        return LinearCombination.of(value)
    return value


def straighten_step(tabloid: Tabloid) -> LinearCombination:
    """Rewrites the monomial of a non-tableau in terms of strictly 
    smaller tabloids.

    Columns of equal length that are out of order are sorted first. 
    Otherwise the leftmost, then topmost, row descent (r, c) selects a 
    snake region and the shuffle relation is solved for T.

    Parameters:
    -----------
        tabloid (Tabloid): A tabloid T that is not a tableau.

    Returns:
    --------
        LinearCombination: An expression for tau whose tabloids all 
            precede T in the total order.

    Raises:
    -------
        ShapeError: If T is already a tableau.
    """
    if (violation := tabloid.row_violation()) is None:
        raise ShapeError(Messages.ALREADY_TABLEAU.format(tabloid=tabloid))
    if (ordered := tabloid.with_sorted_columns()) != tabloid:
        return LinearCombination.of(ordered)
    return shuffle_relation(tabloid, snake_region(tabloid, *violation))


def straighten(
        value: Union[Tabloid, LinearCombination]) -> LinearCombination:
    """Expresses a combination of tabloid monomials in the tableau basis.

    The largest non-tableau term is rewritten by `straighten_step` 
    until only tableaux remain.

    Parameters:
    -----------
        value (Union[Tabloid, LinearCombination]): A tabloid or a 
            combination of tabloids.

    Returns:
    --------
        LinearCombination: An equal combination supported on tableaux.
    """
    combination = _as_combination(value)
    steps = 0
    while (largest := combination.largest(
            lambda tabloid: not tabloid.is_tableau)) is not None:
        combination = combination.replace(largest, straighten_step(largest))
        steps += 1
    _logger.debug("Straightened in %d steps to %d terms", steps, len(combination))
    return combination


def straighten_step_mod(
        tabloid: Tabloid, chain: QChain,
        violation: Optional[Types.Location] = None
    ) -> LinearCombination:
    """Rewrites the residue of a tableau that is not pi-Demazure.

    Parameters:
    -----------
        tabloid (Tabloid): A tableau T that is not pi-Demazure.
        chain (QChain): The chain pi.
        violation (Optional[Types.Location]): Passed to 
            `demazure_region`. Defaults to None.

    Returns:
    --------
        LinearCombination: An expression for the residue of tau whose 
            tabloids all precede T; zero when the region only admits 
            the identity shuffle.

    Raises:
    -------
        ShapeError: If T is not a tableau.
        ValidationError: If T is pi-Demazure.
    """
    if (row_violation := tabloid.row_violation()) is not None:
        raise ShapeError(Messages.NOT_A_TABLEAU.format(
            tabloid=tabloid, row=row_violation[0]))
    region = demazure_region(tabloid, chain, violation)
    return shuffle_relation(tabloid, region)


def reduce_mod(
        value: Union[Tabloid, LinearCombination], chain: QChain
    ) -> LinearCombination:
    """Expresses a combination in the pi-Demazure basis of the quotient.

    Terms not dominated by Y_lambda(pi) are dropped. The largest 
    remaining term that is not a pi-Demazure tableau is rewritten by 
    `straighten_step` or `straighten_step_mod`, until none is left.

    Parameters:
    -----------
        value (Union[Tabloid, LinearCombination]): A tabloid or a 
            combination of tabloids.
        chain (QChain): The chain pi, with Q(lambda) inside Q.

    Returns:
    --------
        LinearCombination: A combination of pi-Demazure tableaux with 
            the same residue.

    Raises:
    -------
        ChainError: If Q(lambda) is not contained in Q.
    """
    combination = _as_combination(value)
    if not chain.qset.covers(combination.shape):
        raise ChainError(Messages.SHAPE_NOT_COVERED.format(
            lengths=list(combination.shape.q_set), q=list(chain.qset.q)))
    bound = lambda_key(combination.shape, chain)

    def settled(tabloid: Tabloid) -> bool:
        return tabloid.is_tableau and is_demazure(tabloid, chain)

    steps = 0
    while True:
        combination = combination.filter(
            lambda tabloid: tabloid.dominated_by(bound))
        if (largest := combination.largest(
                lambda tabloid: not settled(tabloid))) is None:
            break
        if largest.is_tableau:
            step = straighten_step_mod(largest, chain)
        else:
            step = straighten_step(largest)
        combination = combination.replace(largest, step)
        steps += 1
    _logger.debug(
        "Reduced modulo %s in %d steps to %d terms", chain, steps,
        len(combination))
    return combination
