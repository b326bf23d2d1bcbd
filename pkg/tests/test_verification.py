from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from demazure.chains.qchain import QChain
from demazure.chains.qset import QSet
from demazure.exceptions.exceptions import ChainError, VerificationError
from demazure.geometry.cells import sample_cell
from demazure.geometry.preferred import apply_operations, random_carrel_operations
from demazure.geometry.verification import (
    evaluation_vector, projective_factor, proportional, verify_closure,
    verify_free_entries, verify_independence, verify_injective,
    verify_vanishing, verify_zero_set)
from demazure.linalg.minors import eval_monomial
from demazure.linalg.rational_matrix import RationalMatrix
from demazure.linalg.sampling import MatrixSampler
from demazure.straightening.combination import LinearCombination
from demazure.tableaux.partition import Partition
from tests.strategies import chain_of, qsets, shaped_chains, tabloid_of


def test_proportional():
    assert proportional([Fraction(2), Fraction(0), Fraction(4)], [1, 0, 2])
    assert proportional([0, 0], [0, 0])
    assert not proportional([1, 0], [1, 1])
    assert not proportional([1, 2], [1, 3])
    assert not proportional([1], [1, 2])


def test_evaluation_vector():
    shape = Partition([1, 0, 0])
    assert evaluation_vector(shape, RationalMatrix.identity(3)) == (1, 0, 0)
    tabloids = [tabloid_of(3, [[2]])]
    assert evaluation_vector(
        shape, RationalMatrix.identity(3), tabloids) == (0,)


def test_projective_factor():
    shape = Partition([2, 1, 0])
    matrix = RationalMatrix([[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    scaled = matrix.replaced({(row, 1): 2 * matrix[(row, 1)] for row in (1, 2, 3)})
    assert projective_factor(shape, scaled, matrix) == 4
    with pytest.raises(VerificationError):
        projective_factor(shape, matrix, RationalMatrix.identity(3))


@given(qsets(max_n=3), st.integers(min_value=0, max_value=999))
def test_projective_factor_under_flag_operations(qset, seed):
    sampler = MatrixSampler(seed)
    matrix = sampler.invertible_matrix(qset.n)
    moved = apply_operations(
        matrix, random_carrel_operations(qset, sampler, 5), qset)
    shape = Partition.from_column_lengths(qset.n, qset.q)
    factor = projective_factor(shape, moved, matrix)
    assert factor != 0


@pytest.mark.parametrize("parts, sets", [
    ([1, 1, 0], [[2], [2, 3]]),
    ([2, 1, 0], [[2], [2, 3]]),
    ([2, 1, 0], [[3], [1, 3]]),
    ([1, 0, 0, 0], [[3]]),
])
def test_verify_independence(parts, sets):
    shape = Partition(parts)
    chain = chain_of(shape.n, sets)
    report = verify_independence(shape, chain, seed=17)
    assert report.ok
    assert report.rank == report.basis_size
    assert report.samples >= report.basis_size
    assert report.seed == 17


def test_verify_independence_caps_the_samples():
    shape = Partition([2, 1, 0])
    chain = QChain.maximal(QSet(3, [1, 2]))
    report = verify_independence(shape, chain, seed=3, samples=1)
    assert report.samples <= 4 * 1 + 8
    assert report.ok == (report.rank == report.basis_size == 8)


def test_verify_vanishing():
    report = verify_vanishing(
        Partition([2, 1, 0]), chain_of(3, [[2], [2, 3]]), seed=5, samples=10)
    assert report.ok
    assert report.key_vanished == 0
    assert report.nonvanishing == ()
    assert report.samples == 10


def test_verify_zero_set():
    report = verify_zero_set(Partition([2, 1, 0]), chain_of(3, [[2], [2, 3]]), 9)
    assert report.ok
    assert report.checked == 2
    with pytest.raises(ChainError):
        verify_zero_set(Partition([1, 0, 0]), chain_of(3, [[2], [2, 3]]), 9)


def test_verify_injective():
    report = verify_injective(Partition([2, 1, 0]), QSet(3, [1, 2]), seed=4)
    assert report.ok
    assert report.checked == 66
    with pytest.raises(ChainError):
        verify_injective(Partition([1, 0, 0]), QSet(3, [1, 2]), seed=4)


def test_verify_closure():
    chain = chain_of(3, [[1], [1, 3]])
    vanishing = LinearCombination.of(tabloid_of(3, [[1, 3], [2]]))
    report = verify_closure(vanishing, chain, seed=2, samples=10)
    assert report.ok and report.vanishes_on_cell and report.failures == ()
    living = LinearCombination.of(tabloid_of(3, [[1, 2], [1]]))
    report = verify_closure(living, chain, seed=2, samples=10)
    assert report.ok and not report.vanishes_on_cell


@given(shaped_chains(max_n=3), st.integers(min_value=0, max_value=999))
def test_vanishing_and_independence_hold(case, seed):
    shape, chain = case
    assert verify_vanishing(shape, chain, seed, samples=5).ok
    assert verify_independence(shape, chain, seed).ok


@given(qsets(), st.integers(min_value=0, max_value=999))
def test_verify_free_entries(qset, seed):
    matrix = MatrixSampler(seed).invertible_matrix(qset.n)
    assert verify_free_entries(matrix, qset, seed).ok


def test_monomial_above_the_key_vanishes_on_the_cell():
    chain = chain_of(3, [[1], [1, 3]])
    point = sample_cell(chain, 8)
    assert eval_monomial(tabloid_of(3, [[1, 3], [2]]), point) == 0
