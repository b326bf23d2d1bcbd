import pytest
from hypothesis import given, strategies as st

from demazure.chains.bruhat import bruhat_leq, chains_below, lower_chain
from demazure.chains.qchain import QChain, lambda_key
from demazure.chains.qset import QSet
from demazure.exceptions.exceptions import ChainError
from demazure.scanning.demazure import (
    demazure_violations, enumerate_demazure, is_demazure)
from demazure.tableaux.enumeration import enumerate_tableaux
from demazure.tableaux.partition import Partition
from tests.strategies import chain_of, shaped_chains, tabloid_of


def test_is_demazure():
    tableau = tabloid_of(3, [[1, 3], [2]])
    assert is_demazure(tableau, chain_of(3, [[2], [2, 3]]))
    assert not is_demazure(tableau, chain_of(3, [[1], [1, 3]]))


def test_demazure_violations():
    tableau = tabloid_of(3, [[1, 3], [2]])
    assert demazure_violations(tableau, chain_of(3, [[1], [1, 3]])) == (
        (1, 1), (1, 2))
    assert demazure_violations(tableau, chain_of(3, [[2], [2, 3]])) == ()


@pytest.mark.parametrize("parts, sets, expected", [
    ([1, 1, 0], [[2], [2, 3]], [[[1, 2]], [[1, 3]], [[2, 3]]]),
    ([1, 0, 0], [[1], [1, 2]], [[[1]]]),
    ([1, 0, 0], [[2]], [[[1]], [[2]]]),
    ([1, 1, 1], [[1]], [[[1, 2, 3]]]),
])
def test_enumerate_demazure(parts, sets, expected):
    tableaux = enumerate_demazure(Partition(parts), chain_of(3, sets))
    assert [[list(c) for c in t.columns] for t in tableaux] == expected


def test_enumerate_demazure_requires_covering_q():
    with pytest.raises(ChainError):
        enumerate_demazure(Partition([2, 1, 0]), chain_of(3, [[1]]))


@pytest.mark.parametrize("parts", [[2, 1, 0], [1, 1, 0], [2, 0, 0]])
def test_maximal_chain_admits_every_tableau(parts):
    shape = Partition(parts)
    chain = QChain.maximal(QSet(3, [1, 2]))
    assert enumerate_demazure(shape, chain) == enumerate_tableaux(shape)


@given(shaped_chains())
def test_lambda_key_is_demazure(case):
    shape, chain = case
    key = lambda_key(shape, chain)
    assert is_demazure(key, chain)
    assert key in enumerate_demazure(shape, chain)


@given(shaped_chains(), st.data())
def test_demazure_sets_nest_along_bruhat_order(case, data):
    shape, chain = case
    lower = data.draw(st.sampled_from(chains_below(chain)))
    assert set(enumerate_demazure(shape, lower)) <= set(
        enumerate_demazure(shape, chain))


@given(shaped_chains())
def test_demazure_survives_deleting_the_last_column(case):
    shape, chain = case
    for tableau in enumerate_demazure(shape, chain):
        if tableau.shape.width > 1:
            assert is_demazure(tableau.without_last_column(), chain)


@given(shaped_chains())
def test_lower_chain_of_the_rightmost_column(case):
    shape, chain = case
    length = shape.column_lengths[-1]
    if length == chain.n:
        return
    for tableau in enumerate_demazure(shape, chain):
        lower = lower_chain(chain, tableau.columns[-1])
        assert bruhat_leq(lower, chain)
        assert is_demazure(tableau, lower)
