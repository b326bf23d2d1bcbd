from fractions import Fraction

import pytest

from demazure.cli.codec import (
    decode_chain, decode_integer, decode_matrix, decode_region, decode_shape,
    decode_tabloid, dumps, encode_chain, encode_combination, encode_matrix,
    encode_paths, encode_rational, encode_tabloid, parse_json)
from demazure.exceptions.exceptions import ShapeError, ValidationError
from demazure.linalg.rational_matrix import RationalMatrix
from demazure.scanning.scanner import scan
from demazure.straightening.combination import LinearCombination
from demazure.tableaux.partition import Partition
from tests.strategies import chain_of, tabloid_of


def test_parse_json():
    assert parse_json("[[1, 3], [2]]", "tabloid") == [[1, 3], [2]]
    with pytest.raises(ValidationError):
        parse_json("[[1, 3", "tabloid")


def test_dumps_sorts_keys():
    assert dumps({"b": 1, "a": [2]}) == '{"a": [2], "b": 1}'


def test_encode_rational():
    assert encode_rational(Fraction(3)) == 3
    assert encode_rational(Fraction(-1, 2)) == "-1/2"


def test_decode_shape():
    assert decode_shape([2, 1, 0]) == Partition([2, 1, 0])
    with pytest.raises(ValidationError):
        decode_shape("2, 1, 0")
    with pytest.raises(ShapeError):
        decode_shape([1, 2])


@pytest.mark.parametrize("value, n", [
    ([[1, 3], [2]], 3),
    ([[1]], 2),
    ([[1, 2, 3, 4]], 4),
    ({"columns": [[1]], "n": 4}, 4),
])
def test_decode_tabloid_infers_n(value, n):
    assert decode_tabloid(value).n == n


def test_decode_tabloid_with_n():
    tabloid = decode_tabloid([[1, 3], [2]], 4)
    assert tabloid.shape == Partition([2, 1, 0, 0])
    assert encode_tabloid(tabloid) == [[1, 3], [2]]


@pytest.mark.parametrize("value", [[], "[[1]]", [[1], ["2"]], [[True]], {"n": 3}])
def test_decode_tabloid_rejects_malformed_values(value):
    with pytest.raises(ValidationError):
        decode_tabloid(value)


def test_decode_tabloid_rejects_bad_columns():
    with pytest.raises(ShapeError):
        decode_tabloid([[1], []])
    with pytest.raises(ShapeError):
        decode_tabloid([[3, 1]])


def test_decode_chain():
    chain = decode_chain([[2], [2, 3]], 3)
    assert chain == chain_of(3, [[2], [2, 3]])
    assert encode_chain(chain) == [[2], [2, 3]]
    assert decode_chain({"sets": [[2]], "q": [1]}, 3) == chain_of(3, [[2]])
    with pytest.raises(ValidationError):
        decode_chain({"q": [1]}, 3)


def test_decode_matrix():
    matrix = decode_matrix([[1, "1/2"], [0, 2]])
    assert matrix == RationalMatrix([[1, Fraction(1, 2)], [0, 2]])
    assert encode_matrix(matrix) == [[1, "1/2"], [0, 2]]
    with pytest.raises(ValidationError):
        decode_matrix([1, 2])
    with pytest.raises(ValidationError):
        decode_matrix([[1.5]])


def test_decode_region():
    shape = Partition([2, 2, 0, 0])
    region = decode_region([[2, 1], [1, 2]], shape)
    assert set(region) == {(2, 1), (1, 2)}
    with pytest.raises(ValidationError):
        decode_region([[1, 2, 3]], shape)
    with pytest.raises(ValidationError):
        decode_region({"row": 1}, shape)


def test_encode_combination():
    tableau = tabloid_of(3, [[1, 3], [2]])
    assert encode_combination(LinearCombination.of(tableau) * Fraction(1, 2)) == [
        {"columns": [[1, 3], [2]], "coefficient": "1/2"}]


def test_encode_paths():
    paths = encode_paths(scan(tabloid_of(3, [[1, 3], [2]])))
    assert sorted(paths) == ["(1,1)", "(1,2)", "(2,1)"]
    assert paths["(1,1)"] == [[1, 1], [1, 2]]


def test_decode_integer():
    assert decode_integer(3, "n") == 3
    for value in ("3", 3.0, True, None, [3]):
        with pytest.raises(ValidationError):
            decode_integer(value, "n")


def test_decode_tabloid_reads_the_shape():
    tabloid = decode_tabloid(
        {"n": 3, "shape": [2, 1, 0], "columns": [[1, 3], [2]]})
    assert tabloid.shape == Partition([2, 1, 0])
    assert decode_tabloid({"shape": [1, 0, 0, 0], "columns": [[1]]}).n == 4


@pytest.mark.parametrize("value", [
    {"n": 3, "shape": [2, 2, 0], "columns": [[1, 3], [2]]},
    {"n": 4, "shape": [2, 1, 0], "columns": [[1, 3], [2]]},
])
def test_decode_tabloid_rejects_a_disagreeing_shape(value):
    with pytest.raises(ShapeError):
        decode_tabloid(value)


def test_decode_empty_tabloid():
    empty = decode_tabloid({"n": 3, "shape": [0, 0, 0], "columns": []})
    assert empty.shape == Partition([0, 0, 0])
    assert encode_tabloid(empty) == []
    assert decode_tabloid([], 2).shape == Partition([0, 0])


@pytest.mark.parametrize("value", [
    {"columns": [[1]], "n": "x"},
    {"columns": [[1]], "shape": "1, 0"},
])
def test_decode_tabloid_rejects_mistyped_fields(value):
    with pytest.raises(ValidationError):
        decode_tabloid(value)


def test_decode_chain_rejects_mistyped_fields():
    with pytest.raises(ValidationError):
        decode_chain({"sets": [[1]], "q": "a"}, 3)
    with pytest.raises(ValidationError):
        decode_chain([[1]], 3, q=3)
    with pytest.raises(ValidationError):
        decode_chain([[1]], "3")
