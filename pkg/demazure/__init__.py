# -*- coding: utf-8 -*-

from typing import Tuple, Union

from demazure.chains.bruhat import bruhat_leq, chains_below
from demazure.chains.qchain import QChain, lambda_key
from demazure.chains.qset import QSet
from demazure.characters.keys import demazure_dimension, key_polynomial
from demazure.characters.polynomial import Polynomial
from demazure.geometry.cells import cell_of, sample_cell, sample_schubert
from demazure.linalg.rational_matrix import RationalMatrix
from demazure.linalg.sampling import MatrixSampler
from demazure.scanning.demazure import enumerate_demazure, is_demazure
from demazure.straightening.combination import LinearCombination
from demazure.straightening.straighten import reduce_mod
from demazure.tableaux.partition import Partition
from demazure.tableaux.tabloid import Tabloid


class SchubertVariety:
    """Bundles the operations attached to the Schubert variety X(pi)."""

    def __init__(self, chain: QChain) -> None:
        self.__chain: QChain = chain

    @property
    def chain(self) -> QChain:
        return self.__chain

    @property
    def qset(self) -> QSet:
        return self.__chain.qset

    @property
    def cells(self) -> Tuple[QChain, ...]:
        """Returns the chains rho <= pi of the cells making up X(pi)."""
        return chains_below(self.__chain)

    def key(self, shape: Partition) -> Tabloid:
        return lambda_key(shape, self.__chain)

    def is_demazure(self, tableau: Tabloid) -> bool:
        return is_demazure(tableau, self.__chain)

    def basis(self, shape: Partition) -> Tuple[Tabloid, ...]:
        """Returns the pi-Demazure tableaux indexing the standard 
        monomial basis of the quotient."""
        return enumerate_demazure(shape, self.__chain)

    def character(self, shape: Partition) -> Polynomial:
        return key_polynomial(shape, self.__chain)

    def dimension(self, shape: Partition) -> int:
        return demazure_dimension(shape, self.__chain)

    def reduce(
            self, value: Union[Tabloid, LinearCombination]
        ) -> LinearCombination:
        return reduce_mod(value, self.__chain)

    def sample_cell(
            self, seed: Union[int, MatrixSampler]) -> RationalMatrix:
        return sample_cell(self.__chain, seed)

    def sample(self, seed: Union[int, MatrixSampler]) -> RationalMatrix:
        return sample_schubert(self.__chain, seed)

    def contains(self, matrix: RationalMatrix) -> bool:
        """Checks whether the Q-flag of an invertible matrix lies in X(pi)."""
        return bruhat_leq(cell_of(matrix, self.qset), self.__chain)
