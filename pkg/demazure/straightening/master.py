import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from sympy.combinatorics import Permutation

from demazure.exceptions.messages import Messages
from demazure.linalg.minors import eval_monomial
from demazure.linalg.rational_matrix import RationalMatrix
from demazure.straightening.shuffles import check_region, mu_shuffles
from demazure.tableaux.region import Region
from demazure.tableaux.tabloid import Tabloid


_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MasterIdentityCheck:
    """Represents one evaluation of the master identity at a matrix.

    Attributes:
    -----------
        holds (bool): Whether |M_mu(T)| = +/- sum epsilon(sigma) tau_sigma.
        resolved_sign (Optional[int]): The global sign, or None when 
            every term vanishes at the matrix.
        determinant (Fraction): The value of |M_mu(T)|.
        shuffle_sum (Fraction): The value of sum epsilon(sigma) tau_sigma.
        expected_sign (int): The closed-form sign from `diagonal_sign`.
    """
    holds: bool
    resolved_sign: Optional[int]
    determinant: Fraction
    shuffle_sum: Fraction
    expected_sign: int


def diagonal_sign(tabloid: Tabloid, region: Region) -> int:
    """Returns the sign relating the diagonal term of M_mu(T) to tau.

    Each diagonal block lists the rows of T_j inside mu before those 
    outside mu; its determinant is tau_j times the parity of that order.
    """
    check_region(tabloid, region)
    sign = 1
    for column in range(1, tabloid.shape.width + 1):
        order = region.rows_in(column) + region.rows_outside(column)
        sign *= Permutation([row - 1 for row in order]).signature()
    return sign


def diagonal_term(
        tabloid: Tabloid, region: Region, matrix: RationalMatrix
    ) -> Fraction:
    """Evaluates the product of the diagonal blocks of M_mu(T)."""
    product = Fraction(1)
    for column in range(1, tabloid.shape.width + 1):
        values = [tabloid[(row, column)] for row in (
            region.rows_in(column) + region.rows_outside(column))]
        product *= RationalMatrix([
            [matrix[(value, a)] for value in values]
            for a in range(1, tabloid.shape.column_length(column) + 1)
        ]).determinant()
    return product


def compound_matrix(
        tabloid: Tabloid, region: Region, matrix: RationalMatrix
    ) -> RationalMatrix:
    """Builds the compound matrix M_mu(T) evaluated at a matrix f.

    Block (i, j) has zeta_i rows. Its columns are the zeta_i-initial 
    rows of f for the values of T_j inside mu, followed by those for the 
    values of T_j outside mu on the diagonal, or by zeros elsewhere.

    Parameters:
    -----------
        tabloid (Tabloid): The tabloid T.
        region (Region): The region mu.
        matrix (RationalMatrix): The evaluation point f.

    Returns:
    --------
        RationalMatrix: The square matrix of size |lambda|, or the 1 x 1 
            identity for the empty shape.
    """
    check_region(tabloid, region)
    shape = tabloid.shape
    if not shape.size:
        return RationalMatrix.identity(1)
    rows: List[List[Fraction]] = []
    for i in range(1, shape.width + 1):
        for a in range(1, shape.column_length(i) + 1):
            row: List[Fraction] = []
            for j in range(1, shape.width + 1):
                active = [tabloid[(r, j)] for r in region.rows_in(j)]
                inactive = [tabloid[(r, j)] for r in region.rows_outside(j)]
                row.extend(matrix[(value, a)] for value in active)
                row.extend(
                    matrix[(value, a)] if i == j else Fraction(0)
                    for value in inactive)
            rows.append(row)
    return RationalMatrix(rows)


def verify_master_identity(
        tabloid: Tabloid, region: Region, matrix: RationalMatrix
    ) -> MasterIdentityCheck:
    """Compares |M_mu(T)| with the signed sum of the mu-shuffle monomials 
    at a matrix f.

    The global sign is resolved from the two values when the sum is 
    nonzero, and otherwise from the diagonal term against tau when 
    tau(f) is nonzero.

    Parameters:
    -----------
        tabloid (Tabloid): The tabloid T.
        region (Region): The region mu.
        matrix (RationalMatrix): The evaluation point f.

    Returns:
    --------
        MasterIdentityCheck: The outcome and both evaluated sides.
    """
    determinant = compound_matrix(tabloid, region, matrix).determinant()
    total = sum((
        term.sign * eval_monomial(term.result, matrix)
        for term in mu_shuffles(tabloid, region)), Fraction(0))
    expected = diagonal_sign(tabloid, region)
    resolved: Optional[int] = None
    if total:
        if determinant in (total, -total):
            resolved = 1 if determinant == total else -1
        holds = resolved is not None
    else:
        holds = not determinant
        if tau := eval_monomial(tabloid, matrix):
            diagonal = diagonal_term(tabloid, region, matrix)
            resolved = 1 if diagonal == tau else -1
    _logger.debug(
        "Master identity for %s on %r: |M| = %s, sum = %s, sign = %s",
        tabloid, region, determinant, total, resolved)
    if not holds:
        _logger.warning(Messages.MASTER_IDENTITY_FAILED.format(
            tabloid=tabloid, region=list(region),
            determinant=determinant, total=total))
    return MasterIdentityCheck(
        holds, resolved, determinant, total, expected)
