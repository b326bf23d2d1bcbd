import pytest
from hypothesis import given, strategies as st

from demazure.chains.bruhat import (
    bruhat_leq, chains_below, descent_path, enumerate_chains, lower_chain,
    step_down)
from demazure.chains.qchain import QChain, lambda_key, reflect
from demazure.chains.qset import QSet, all_qsets
from demazure.exceptions.exceptions import ChainError
from demazure.tableaux.partition import enumerate_partitions
from demazure.tableaux.tabloid import dominance_leq
from tests.strategies import chain_of, chains


def test_bruhat_leq():
    assert bruhat_leq(chain_of(4, [[1, 3]]), chain_of(4, [[2, 3]]))
    assert not bruhat_leq(chain_of(4, [[2, 4]]), chain_of(4, [[1, 3]]))
    assert not bruhat_leq(chain_of(4, [[1, 4]]), chain_of(4, [[2, 3]]))
    assert bruhat_leq(chain_of(4, [[2, 3]]), chain_of(4, [[2, 3]]))


def test_bruhat_leq_requires_same_qset():
    with pytest.raises(ChainError):
        bruhat_leq(chain_of(3, [[1]]), chain_of(3, [[1, 2]]))


@pytest.mark.parametrize("target, source, expected", [
    ([[1]], [[3]], (1, 3)),
    ([[1], [1, 2]], [[2], [2, 3]], (1, 2)),
])
def test_step_down(target, source, expected):
    lower, upper = chain_of(3, target), chain_of(3, source)
    assert step_down(lower, upper) == expected
    stepped = reflect(upper, *expected)
    assert bruhat_leq(lower, stepped)
    assert stepped != upper and bruhat_leq(stepped, upper)


def test_step_down_requires_strictly_below():
    chain = chain_of(3, [[2], [2, 3]])
    with pytest.raises(ChainError):
        step_down(chain, chain)
    with pytest.raises(ChainError):
        step_down(chain, chain_of(3, [[1], [1, 2]]))


def test_descent_path():
    lower, upper = chain_of(3, [[1], [1, 2]]), chain_of(3, [[3], [2, 3]])
    path = descent_path(lower, upper)
    assert path[0] == upper
    assert path[-1] == lower
    for above, below in zip(path, path[1:]):
        assert below != above and bruhat_leq(below, above)
    assert descent_path(upper, upper) == (upper,)


def test_enumerate_chains():
    assert len(enumerate_chains(QSet(3, [1, 2]))) == 6
    assert len(enumerate_chains(QSet(4, [2]))) == 6
    assert len(enumerate_chains(QSet(4, [1, 3]))) == 12
    assert enumerate_chains(QSet(3, [1]))[0].sets == ((1,),)


def test_chains_below():
    qset = QSet(3, [1, 2])
    assert chains_below(QChain.minimal(qset)) == (QChain.minimal(qset),)
    assert set(chains_below(QChain.maximal(qset))) == set(
        enumerate_chains(qset))
    assert len(chains_below(chain_of(3, [[2], [2, 3]]))) == 4


def test_lower_chain():
    chain = QChain.maximal(QSet(3, [1, 2]))
    lower = lower_chain(chain, [1])
    assert lower.sets == ((1,), (1, 3))
    assert bruhat_leq(lower, chain)
    assert lower_chain(chain, [1, 2]).sets == ((1,), (1, 2))


def test_lower_chain_errors():
    chain = chain_of(3, [[1], [1, 2]])
    with pytest.raises(ChainError):
        lower_chain(chain, [2])
    with pytest.raises(ChainError):
        lower_chain(chain, [1, 2, 3])


@given(chains(), st.data())
def test_descent_path_reaches_every_lower_chain(chain, data):
    lower = data.draw(st.sampled_from(chains_below(chain)))
    path = descent_path(lower, chain)
    assert path[-1] == lower
    assert all(bruhat_leq(lower, step) for step in path)


@given(chains(), st.data())
def test_lower_chain_ends_in_its_column(chain, data):
    index = data.draw(st.integers(min_value=0, max_value=chain.qset.k - 1))
    bound = chain.sets[index]
    column = sorted(data.draw(st.sets(
        st.integers(min_value=1, max_value=chain.n),
        min_size=len(bound), max_size=len(bound))))
    if any(value > limit for value, limit in zip(column, bound)):
        return
    lower = lower_chain(chain, column)
    assert bruhat_leq(lower, chain)
    assert lower.sets[index] == tuple(column)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_keys_follow_the_bruhat_order(n):
    for qset in all_qsets(n):
        every = enumerate_chains(qset)
        for size in range(1, 5):
            for shape in enumerate_partitions(n, size):
                if not qset.covers(shape):
                    continue
                faithful = set(shape.q_set) == set(qset.q)
                for lower in every:
                    for upper in every:
                        below = bruhat_leq(lower, upper)
                        keys_below = dominance_leq(
                            lambda_key(shape, lower), lambda_key(shape, upper))
                        if below:
                            assert keys_below
                        if faithful:
                            assert keys_below == below
