from fractions import Fraction
from typing import (
    Callable, Dict, Iterator, Mapping, Optional, Tuple, Union)

from typing_extensions import Self

from demazure.exceptions.exceptions import ShapeError
from demazure.exceptions.messages import Messages
from demazure.linalg.minors import eval_monomial
from demazure.linalg.rational_matrix import RationalMatrix, to_fraction
from demazure.tableaux.partition import Partition
from demazure.tableaux.tabloid import Tabloid
from demazure.types.types import Types


class LinearCombination:
    """Represents a finite rational combination of tabloid monomials of 
    a single shape.

    Zero coefficients are never stored; iteration follows the total 
    order of the tabloids.
    """

    def __init__(
            self, shape: Partition,
            terms: Optional[Mapping[Tabloid, Types.Scalar]] = None
        ) -> None:
        """Initializes a LinearCombination object.

        Parameters:
        -----------
            shape (Partition): The common shape of the tabloids.
            terms (Optional[Mapping[Tabloid, Types.Scalar]]): The 
                coefficient of each tabloid. Defaults to None, the zero 
                combination.

        Raises:
        -------
            ShapeError: If a tabloid has another shape.
        """
        self.__shape: Partition = shape
        self.__terms: Dict[Tabloid, Fraction] = {}
        for tabloid, coefficient in (terms or {}).items():
            if tabloid.shape != shape:
                raise ShapeError(Messages.SHAPE_MISMATCH.format(
                    expected=list(shape.parts),
                    current=list(tabloid.shape.parts)))
            if value := to_fraction(coefficient):
                self.__terms[tabloid] = value

    @classmethod
    def of(
            cls, tabloid: Tabloid, coefficient: Types.Scalar = 1
        ) -> Self:
        """Builds the combination holding a single tabloid."""
        return cls(tabloid.shape, {tabloid: coefficient})

    @property
    def shape(self) -> Partition:
        return self.__shape

    @property
    def terms(self) -> Dict[Tabloid, Fraction]:
        """Returns a copy of the nonzero coefficients."""
        return dict(self.__terms)

    @property
    def support(self) -> Tuple[Tabloid, ...]:
        """Returns the tabloids with nonzero coefficient, in total order."""
        return tuple(sorted(self.__terms))

    def items(self) -> Iterator[Tuple[Tabloid, Fraction]]:
        for tabloid in self.support:
            yield tabloid, self.__terms[tabloid]

    def largest(
            self, predicate: Callable[[Tabloid], bool] = lambda _: True
        ) -> Optional[Tabloid]:
        """Returns the largest tabloid of the support satisfying a 
        predicate, or None."""
        for tabloid in reversed(self.support):
            if predicate(tabloid):
                return tabloid
        return None

    def filter(
            self, predicate: Callable[[Tabloid], bool]
        ) -> "LinearCombination":
        """Keeps the terms whose tabloid satisfies the predicate."""
        return LinearCombination(self.__shape, {
            tabloid: coefficient
            for tabloid, coefficient in self.__terms.items()
            if predicate(tabloid)})

    def replace(
            self, tabloid: Tabloid, combination: "LinearCombination"
        ) -> "LinearCombination":
        """Substitutes a combination for one tabloid of the support.

        Parameters:
        -----------
            tabloid (Tabloid): The tabloid U to eliminate.
            combination (LinearCombination): An expression for U.

        Returns:
        --------
            LinearCombination: The combination with a_U U replaced by 
                a_U times the expression.
        """
        coefficient = self[tabloid]
        return (self - LinearCombination.of(tabloid, coefficient)
                + combination * coefficient)

    def evaluate(self, matrix: RationalMatrix) -> Fraction:
        """Evaluates the combination of monomials at a matrix."""
        return sum((
            coefficient * eval_monomial(tabloid, matrix)
            for tabloid, coefficient in self.items()), Fraction(0))

    def __getitem__(self, tabloid: Tabloid) -> Fraction:
        return self.__terms.get(tabloid, Fraction(0))

    def __iter__(self) -> Iterator[Tabloid]:
        return iter(self.support)

    def __len__(self) -> int:
        return len(self.__terms)

    def __bool__(self) -> bool:
        return bool(self.__terms)

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        if other.shape != self.__shape:
            raise ShapeError(Messages.SHAPE_MISMATCH.format(
                expected=list(self.__shape.parts),
                current=list(other.shape.parts)))
        terms = dict(self.__terms)
        for tabloid, coefficient in other.terms.items():
            terms[tabloid] = terms.get(tabloid, Fraction(0)) + coefficient
        return LinearCombination(self.__shape, terms)

    def __neg__(self) -> "LinearCombination":
        return self * -1

    def __sub__(self, other: "LinearCombination") -> "LinearCombination":
        return self + (-other)

    def __mul__(self, scalar: Union[int, Fraction]) -> "LinearCombination":
        return LinearCombination(self.__shape, {
            tabloid: coefficient * scalar
            for tabloid, coefficient in self.__terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self.__shape == other.shape and self.__terms == other.terms

    def __repr__(self) -> str:
        return "LinearCombination(%r, %s)" % (self.__shape, str(self))

    def __str__(self) -> str:
        if not self.__terms:
            return "0"
        return " + ".join(
            "%s*%s" % (coefficient, tabloid)
            for tabloid, coefficient in self.items())
