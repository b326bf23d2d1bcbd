from typing import Union

from demazure.chains.bruhat import chains_below
from demazure.chains.qchain import QChain, chain_to_qperm
from demazure.chains.qset import QSet
from demazure.geometry.preferred import q_preferred_reduce
from demazure.linalg.rational_matrix import RationalMatrix
from demazure.linalg.sampling import MatrixSampler


def _sampler(seed: Union[int, MatrixSampler]) -> MatrixSampler:
    return seed if isinstance(seed, MatrixSampler) else MatrixSampler(seed)


def perm_matrix(chain: QChain) -> RationalMatrix:
    """Builds the permutation matrix s_pi with a 1 at (pi_j, j), where 
    pi_1..pi_n is the Q-permutation of the chain."""
    return RationalMatrix.from_entries(chain.n, {
        (row, column): 1
        for column, row in enumerate(chain_to_qperm(chain), 1)})


def cell_of(matrix: RationalMatrix, qset: QSet) -> QChain:
    """Returns the chain pi whose Bruhat cell C(pi) holds the Q-flag 
    of an invertible matrix.

    Raises:
    -------
        MatrixError: If the matrix is singular or not n x n.
    """
    return q_preferred_reduce(matrix, qset).chain


def sample_cell(
        chain: QChain, seed: Union[int, MatrixSampler]) -> RationalMatrix:
    """Draws a point b * s_pi of the Bruhat cell C(pi).

    Parameters:
    -----------
        chain (QChain): The chain pi.
        seed (Union[int, MatrixSampler]): A seed, or a sampler to 
            draw from when several samples share one generator.

    Returns:
    --------
        RationalMatrix: The basis b * s_pi, for a random invertible 
            upper-triangular integer matrix b.
    """
    sampler = _sampler(seed)
    return sampler.upper_triangular(chain.n) @ perm_matrix(chain)


def sample_schubert(
        chain: QChain, seed: Union[int, MatrixSampler]) -> RationalMatrix:
    """Draws a point of the Schubert variety X(pi) from a cell C(rho) 
    picked uniformly among the chains rho <= pi."""
    sampler = _sampler(seed)
    return sample_cell(sampler.choice(list(chains_below(chain))), sampler)
