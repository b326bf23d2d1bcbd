import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Union

from demazure.chains.qchain import QChain
from demazure.chains.qset import QSet
from demazure.exceptions.exceptions import ShapeError, ValidationError
from demazure.exceptions.messages import Messages
from demazure.linalg.rational_matrix import RationalMatrix, to_fraction
from demazure.scanning.scanner import ScanResult
from demazure.straightening.combination import LinearCombination
from demazure.tableaux.partition import Partition
from demazure.tableaux.region import Region
from demazure.tableaux.tabloid import Tabloid
from demazure.types.formats import Formats


def parse_json(text: str, field: str) -> Any:
    """Parses a JSON value, reporting the field it came from.

    Raises:
    -------
        ValidationError: If the text is not valid JSON.
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise ValidationError(
            Messages.MALFORMED_JSON.format(field=field, error=error))


def dumps(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True)


def encode_rational(value: Fraction) -> Union[int, str]:
    """Writes integers as JSON numbers and other rationals as "p/q"."""
    return value.numerator if value.denominator == 1 else str(value)


def decode_integer(value: Any, field: str) -> int:
    """Checks that a decoded JSON value is an integer.

    Raises:
    -------
        ValidationError: If the value is not an integer.
    """
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(Messages.MALFORMED_JSON.format(
            field=field, error="expected an integer, got %r" % (value,)))
    return value


def decode_integers(value: Any, field: str) -> List[int]:
    if not isinstance(value, list) or not all(
            isinstance(item, int) and not isinstance(item, bool)
            for item in value):
        raise ValidationError(Messages.MALFORMED_JSON.format(
            field=field, error="expected a list of integers"))
    return value


def decode_shape(value: Any) -> Partition:
    return Partition(decode_integers(value, Formats.SHAPE))


def decode_tabloid(value: Any, n: Optional[int] = None) -> Tabloid:
    """Reads a tabloid from a list of columns or an object holding 
    "columns" and optionally "n" and "shape".

    Without n the tabloid lives in the rows of its shape, or else in the 
    smallest [n] holding its values and its columns. An empty list of 
    columns is the tabloid of the empty shape and needs n or the shape.

    Raises:
    -------
        ValidationError: If the value is malformed.
        ShapeError: If the columns do not fill the given shape.
    """
    shape: Optional[Partition] = None
    if isinstance(value, dict):
        n = value.get(Formats.N, n)
        if value.get(Formats.SHAPE) is not None:
            shape = decode_shape(value[Formats.SHAPE])
        value = value.get(Formats.COLUMNS)
    if n is not None:
        n = decode_integer(n, Formats.N)
    if shape is not None:
        if n is not None and shape.n != n:
            raise ShapeError(Messages.SHAPE_MISMATCH.format(
                expected="%d parts" % n, current=list(shape.parts)))
        n = shape.n
    if not isinstance(value, list) or not (value or n is not None):
        raise ValidationError(Messages.MALFORMED_JSON.format(
            field=Formats.TABLOID, error="expected a list of columns"))
    columns = [decode_integers(column, Formats.COLUMNS) for column in value]
    if n is None:
        n = max([2] + [len(column) for column in columns] + [
            item for column in columns for item in column])
    if any(not column for column in columns):
        raise ShapeError(Messages.EMPTY_SEQUENCE)
    filled = Partition.from_column_lengths(n, [len(c) for c in columns])
    if shape is not None and shape != filled:
        raise ShapeError(Messages.SHAPE_MISMATCH.format(
            expected=list(shape.parts), current=list(filled.parts)))
    return Tabloid(filled, columns)


def encode_tabloid(tabloid: Tabloid) -> List[List[int]]:
    return [list(column) for column in tabloid.columns]


def decode_chain(value: Any, n: int, q: Optional[Sequence[int]] = None) -> QChain:
    """Reads a chain from its list of sets, for the given Q or the Q 
    of the set sizes."""
    if isinstance(value, dict):
        q = value.get(Formats.Q, q)
        value = value.get(Formats.SETS)
    if not isinstance(value, list):
        raise ValidationError(Messages.MALFORMED_JSON.format(
            field=Formats.CHAIN, error="expected a list of sets"))
    sets = [decode_integers(values, Formats.SETS) for values in value]
    n = decode_integer(n, Formats.N)
    if q is None:
        return QChain.from_sets(n, sets)
    return QChain(QSet(n, decode_integers(q, Formats.Q)), sets)


def encode_chain(chain: QChain) -> List[List[int]]:
    return [list(values) for values in chain.sets]


def decode_matrix(value: Any) -> RationalMatrix:
    """Reads a matrix from rows of integers or "p/q" strings."""
    if not isinstance(value, list) or not all(
            isinstance(row, list) for row in value):
        raise ValidationError(Messages.MALFORMED_JSON.format(
            field=Formats.MATRIX, error="expected a list of rows"))
    return RationalMatrix([
        [to_fraction(entry) for entry in row] for row in value])


def encode_matrix(matrix: RationalMatrix) -> List[List[Union[int, str]]]:
    return [[encode_rational(entry) for entry in row] for row in matrix.rows]


def decode_region(value: Any, shape: Partition) -> Region:
    if not isinstance(value, list):
        raise ValidationError(Messages.MALFORMED_JSON.format(
            field=Formats.REGION, error="expected a list of locations"))
    locations = [decode_integers(location, Formats.REGION) for location in value]
    if any(len(location) != 2 for location in locations):
        raise ValidationError(Messages.MALFORMED_JSON.format(
            field=Formats.REGION, error="locations are [row, column]"))
    return Region(shape, [tuple(location) for location in locations])


def encode_combination(combination: LinearCombination) -> List[Dict[str, Any]]:
    return [
        {Formats.COLUMNS: encode_tabloid(tabloid),
         Formats.COEFFICIENT: encode_rational(coefficient)}
        for tabloid, coefficient in combination.items()]


def encode_paths(result: ScanResult) -> Dict[str, List[List[int]]]:
    return {
        Formats.LOCATION.format(row=row, column=column): [
            list(location) for location in path]
        for (row, column), path in sorted(result.paths.items())}
