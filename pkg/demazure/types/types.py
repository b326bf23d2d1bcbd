from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union


@dataclass(frozen=True, init=False)
class Types:
    """Represents the type aliases shared across the package."""
    Location = Tuple[int, int]
    Column = Tuple[int, ...]
    Columns = Tuple[Tuple[int, ...], ...]
    Permutation = Tuple[int, ...]
    Exponents = Tuple[int, ...]
    Scalar = Union[int, Fraction, str]
