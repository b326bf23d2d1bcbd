from typing import List, Optional

from demazure.chains.qchain import QChain, lambda_key
from demazure.exceptions.exceptions import (
    ShapeError, ValidationError, VerificationError)
from demazure.exceptions.messages import Messages
from demazure.scanning.demazure import demazure_violations
from demazure.scanning.scanner import scan
from demazure.tableaux.region import Region
from demazure.tableaux.tabloid import Tabloid
from demazure.types.types import Types


def snake_region(tabloid: Tabloid, row: int, column: int) -> Region:
    """Builds the snake region {(i, c) | r <= i <= zeta_c} together with 
    {(j, c + 1) | 1 <= j <= r}.

    Raises:
    -------
        ShapeError: Unless 1 <= c < lambda_1 and 1 <= r <= zeta_{c+1}.
    """
    shape = tabloid.shape
    if not (1 <= column < shape.width
            and 1 <= row <= shape.column_length(column + 1)):
        raise ShapeError(Messages.SNAKE_OUT_OF_RANGE.format(
            width=shape.width, height=shape.column_length(column + 1),
            row=row, column=column))
    lower = [(i, column) for i in range(row, shape.column_length(column) + 1)]
    upper = [(j, column + 1) for j in range(1, row + 1)]
    return Region(shape, lower + upper)


def demazure_region(
        tabloid: Tabloid, chain: QChain,
        violation: Optional[Types.Location] = None
    ) -> Region:
    """Builds the region used to rewrite a tableau that is not 
    pi-Demazure.

    The violation (r, c) is a location with S(T)(r, c) > Y_lambda(pi)(r, c); 
    by default the one with the largest column, then the largest row. 
    (p_r, b_r) is the first location on P(T; r, c) whose value exceeds 
    Y_lambda(pi)(r, c). Each following (p_t, b_t) is the first location on 
    P(T; t, c) in a column <= b_{t-1} whose value exceeds the previous one.

    Parameters:
    -----------
        tabloid (Tabloid): A tableau T that is not pi-Demazure.
        chain (QChain): The chain pi.
        violation (Optional[Types.Location]): The violation to start 
            from. Defaults to None, the deepest rightmost violation.

    Returns:
    --------
        Region: The locations (p_r, b_r), ..., (p_{zeta_c}, b_{zeta_c}).

    Raises:
    -------
        ValidationError: If T is pi-Demazure or the given location is 
            not a violation.
        VerificationError: If some path has no continuing location.
    """
    violations = demazure_violations(tabloid, chain)
    if not violations:
        raise ValidationError(Messages.ALREADY_DEMAZURE.format(
            tabloid=tabloid, chain=chain))
    if violation is None:
        violation = max(violations, key=lambda rc: (rc[1], rc[0]))
    elif tuple(violation) not in violations:
        raise ValidationError(Messages.NOT_A_VIOLATION.format(
            location=tuple(violation), tabloid=tabloid, chain=chain))
    row, column = violation
    bound = lambda_key(tabloid.shape, chain)[(row, column)]
    result = scan(tabloid)
    current = next(
        location for location in result.path(row, column)
        if tabloid[location] > bound)
    locations: List[Types.Location] = [current]
    for lower in range(row + 1, tabloid.shape.column_length(column) + 1):
        value, limit = tabloid[current], current[1]
        current = next((
            location for location in result.path(lower, column)
            if location[1] <= limit and tabloid[location] > value), None)
        if current is None:
            raise VerificationError(Messages.PATH_MISSING.format(
                row=lower, column=column, tabloid=tabloid))
        locations.append(current)
    return Region(tabloid.shape, locations)
