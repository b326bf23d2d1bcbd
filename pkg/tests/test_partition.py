import pytest

from demazure.exceptions.exceptions import ShapeError, ValidationError
from demazure.tableaux.partition import Partition, enumerate_partitions


def test_partition_init():
    shape = Partition([2, 1, 0])
    assert shape.parts == (2, 1, 0)
    assert shape.n == 3
    assert shape.width == 2
    assert shape.size == 3


def test_partition_columns():
    shape = Partition([2, 1, 0])
    assert shape.column_lengths == (2, 1)
    assert shape.column_length(1) == 2
    assert shape.column_length(2) == 1
    assert shape.column_length(3) == 0
    assert shape.locations == ((1, 1), (2, 1), (1, 2))


def test_partition_q_set():
    assert Partition([2, 1, 0]).q_set == (1, 2)
    assert Partition([3, 3, 1, 0]).q_set == (2, 3)
    assert Partition([1, 1, 1]).q_set == ()


def test_full_columns_are_not_in_q_set():
    assert Partition([2, 1, 1]).column_lengths == (3, 1)
    assert Partition([2, 1, 1]).q_set == (1,)


def test_partition_contains():
    shape = Partition([2, 1, 0])
    assert shape.contains((2, 1))
    assert not shape.contains((2, 2))
    assert not shape.contains((1, 3))
    assert not shape.contains((0, 1))


def test_empty_partition():
    shape = Partition([0, 0, 0])
    assert shape.width == 0
    assert shape.column_lengths == ()
    assert shape.locations == ()
    assert shape.q_set == ()


@pytest.mark.parametrize("parts", [[1], [], [1, 2], [2, 1, -1]])
def test_invalid_partition(parts):
    with pytest.raises(ShapeError):
        Partition(parts)


def test_shape_error_is_validation_error():
    with pytest.raises(ValidationError):
        Partition([0, 1])


def test_from_column_lengths():
    assert Partition.from_column_lengths(3, [1, 2]) == Partition([2, 1, 0])
    assert Partition.from_column_lengths(4, [2, 2]) == Partition([2, 2, 0, 0])
    assert Partition.from_column_lengths(2, []) == Partition([0, 0])


@pytest.mark.parametrize("lengths", [[4], [0, 1]])
def test_from_column_lengths_out_of_range(lengths):
    with pytest.raises(ShapeError, match=r"Column lengths must lie in \[1, 3\]"):
        Partition.from_column_lengths(3, lengths)


def test_without_last_column():
    assert Partition([2, 1, 0]).without_last_column() == Partition([1, 1, 0])
    assert Partition([1, 0]).without_last_column() == Partition([0, 0])


def test_partition_equality_and_hash():
    assert Partition([2, 1, 0]) == Partition((2, 1, 0))
    assert Partition([2, 1, 0]) != Partition([2, 1, 0, 0])
    assert len({Partition([1, 0]), Partition([1, 0])}) == 1


def test_enumerate_partitions():
    parts = [shape.parts for shape in enumerate_partitions(3, 2)]
    assert parts == [(2, 0, 0), (1, 1, 0)]


@pytest.mark.parametrize("n, size, count", [
    (4, 4, 5), (3, 4, 4), (2, 3, 2), (3, 0, 1)])
def test_enumerate_partitions_counts(n, size, count):
    shapes = enumerate_partitions(n, size)
    assert len(shapes) == count
    assert all(shape.size == size and shape.n == n for shape in shapes)
