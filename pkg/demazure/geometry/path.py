from fractions import Fraction

from demazure.chains.bruhat import bruhat_leq
from demazure.chains.qchain import QChain, chain_to_qperm, reflect
from demazure.exceptions.exceptions import ChainError, MatrixError
from demazure.exceptions.messages import Messages
from demazure.geometry.cells import perm_matrix
from demazure.linalg.rational_matrix import RationalMatrix, to_fraction
from demazure.types.types import Types


def gamma_path(
        chain: QChain, i: int, j: int, t: Types.Scalar) -> RationalMatrix:
    """Evaluates the degeneration path from C(pi) to C(sigma_ij pi).

    Starting from s_pi, whose rows i and j carry their 1s in columns 
    c_i and c_j, the 2 x 2 block on rows (i, j) and columns (c_j, c_i) 
    becomes [[1 - t, t], [t, 1 - t]]. For 0 < t < 1/2 the point stays 
    in C(pi); at t = 0 it is the permutation matrix of sigma_ij pi.

    Parameters:
    -----------
        chain (QChain): The chain pi.
        i (int): The smaller index of the reflection.
        j (int): The larger index of the reflection.
        t (Types.Scalar): The path parameter, 0 <= t < 1/2.

    Returns:
    --------
        RationalMatrix: The point gamma(t).

    Raises:
    -------
        ChainError: If sigma_ij pi is not strictly below pi.
        MatrixError: If t is outside [0, 1/2).
    """
    lower = reflect(chain, i, j)
    if lower == chain or not bruhat_leq(lower, chain):
        raise ChainError(Messages.NOT_STRICTLY_BELOW.format(
            target=lower, source=chain))
    t = to_fraction(t)
    if not 0 <= t < Fraction(1, 2):
        raise MatrixError(Messages.PARAMETER_OUT_OF_RANGE.format(t=t))
    perm = chain_to_qperm(chain)
    column_i, column_j = perm.index(i) + 1, perm.index(j) + 1
    return perm_matrix(chain).replaced({
        (i, column_j): 1 - t, (i, column_i): t,
        (j, column_j): t, (j, column_i): 1 - t})


def beta_path(
        chain: QChain, i: int, j: int, t: Types.Scalar,
        base: RationalMatrix
    ) -> RationalMatrix:
    """Moves the degeneration path by an upper-triangular matrix, so that 
    it ends at base * s_rho, an arbitrary point of the lower cell.

    Raises:
    -------
        MatrixError: If base is not invertible upper-triangular of size n.
        ChainError: As for gamma_path.
    """
    if not base.is_square or base.row_count != chain.n:
        raise MatrixError(Messages.MATRIX_DIMENSION.format(
            expected=chain.n, current=base.row_count))
    if any(base[(row, column)] for row in range(2, chain.n + 1)
           for column in range(1, row)) or not all(
               base[(index, index)] for index in range(1, chain.n + 1)):
        raise MatrixError(Messages.NOT_UPPER_TRIANGULAR)
    return base @ gamma_path(chain, i, j, t)
