from fractions import Fraction
from typing import Dict, Final, Iterator, Mapping, Optional, Sequence, Tuple, Union

import sympy
from typing_extensions import Self

from demazure.exceptions.exceptions import ShapeError
from demazure.exceptions.messages import Messages
from demazure.types.formats import Formats
from demazure.types.types import Types


class Polynomial:
    """Represents a polynomial in y_1, ..., y_n with integer 
    coefficients, stored as a map from exponent vectors to nonzero 
    coefficients.

    Attributes:
    -----------
        STRING (Final[str]): A string template for the representation 
            of the Polynomial object.
    """

    STRING: Final[str] = "Polynomial(%d, %s)"

    def __init__(
            self, n: int, terms: Optional[Mapping[Types.Exponents, int]] = None
        ) -> None:
        """Initializes a Polynomial object.

        Parameters:
        -----------
            n (int): The number of variables.
            terms (Mapping[Types.Exponents, int]): The coefficient of 
                each exponent vector. Defaults to None, the zero 
                polynomial.

        Raises:
        -------
            ShapeError: If an exponent vector has the wrong length or 
                a negative entry.
        """
        self.__n: int = n
        self.__terms: Dict[Types.Exponents, int] = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != n or min(exponents, default=0) < 0:
                raise ShapeError(Messages.EXPONENTS_INVALID.format(
                    exponents=list(exponents), n=n))
            if coefficient:
                self.__terms[exponents] = int(coefficient)

    @classmethod
    def monomial(
            cls, exponents: Sequence[int], coefficient: int = 1
        ) -> Self:
        """Builds the single term coefficient * y^exponents."""
        return cls(len(exponents), {tuple(exponents): coefficient})

    @property
    def n(self) -> int:
        return self.__n

    @property
    def terms(self) -> Dict[Types.Exponents, int]:
        return dict(self.__terms)

    def items(self) -> Iterator[Tuple[Types.Exponents, int]]:
        """Yields the terms by decreasing exponent vector."""
        for exponents in sorted(self.__terms, reverse=True):
            yield exponents, self.__terms[exponents]

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self.__terms.get(tuple(exponents), 0)

    def evaluate(self, values: Sequence[Union[int, Fraction]]) -> Fraction:
        """Evaluates the polynomial at y = values."""
        total = Fraction(0)
        for exponents, coefficient in self.__terms.items():
            term = Fraction(coefficient)
            for value, exponent in zip(values, exponents):
                term *= Fraction(value) ** exponent
            total += term
        return total

    def at_ones(self) -> int:
        """Returns the sum of the coefficients."""
        return sum(self.__terms.values())

    def swap_variables(self, index: int) -> "Polynomial":
        """Applies the transposition s_i exchanging y_i and y_{i+1}."""
        swapped: Dict[Types.Exponents, int] = {}
        for exponents, coefficient in self.__terms.items():
            values = list(exponents)
            values[index - 1], values[index] = values[index], values[index - 1]
            swapped[tuple(values)] = coefficient
        return Polynomial(self.__n, swapped)

    def is_symmetric(self) -> bool:
        return all(
            self.swap_variables(index) == self
            for index in range(1, self.__n))

    def to_sympy(self) -> sympy.Expr:
        """Converts to a sympy expression in the symbols y1, ..., yn."""
        symbols = sympy.symbols("y1:%d" % (self.__n + 1))
        return sympy.Add(*(
            coefficient * sympy.Mul(*(
                symbol ** exponent
                for symbol, exponent in zip(symbols, exponents)))
            for exponents, coefficient in self.__terms.items()))

    def __check_size(self, other: "Polynomial") -> None:
        if other.n != self.__n:
            raise ShapeError(Messages.VARIABLE_COUNT_MISMATCH.format(
                expected=self.__n, current=other.n))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self.__check_size(other)
        terms = dict(self.__terms)
        for exponents, coefficient in other.terms.items():
            terms[exponents] = terms.get(exponents, 0) + coefficient
        return Polynomial(self.__n, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.__n, {
            exponents: -coefficient
            for exponents, coefficient in self.__terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", int]) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(self.__n, {
                exponents: coefficient * other
                for exponents, coefficient in self.__terms.items()})
        self.__check_size(other)
        terms: Dict[Types.Exponents, int] = {}
        for exponents, coefficient in self.__terms.items():
            for others, factor in other.terms.items():
                key = tuple(a + b for a, b in zip(exponents, others))
                terms[key] = terms.get(key, 0) + coefficient * factor
        return Polynomial(self.__n, terms)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.__terms)

    def __len__(self) -> int:
        return len(self.__terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.__n == other.n and self.__terms == other.terms

    def __hash__(self) -> int:
        return hash((self.__n, frozenset(self.__terms.items())))

    def __repr__(self) -> str:
        return self.STRING % (self.__n, dict(self.items()))

    def __str__(self) -> str:
        """Formats the polynomial as "2*y1^2 + y1*y2 - y3", terms by 
        decreasing exponent vector, "0" when empty."""
        text = ""
        for exponents, coefficient in self.items():
            factors = [
                Formats.VARIABLE.format(index=index) if exponent == 1
                else Formats.POWER.format(index=index, exponent=exponent)
                for index, exponent in enumerate(exponents, 1) if exponent]
            size = abs(coefficient)
            if not factors:
                term = str(size)
            elif size == 1:
                term = "*".join(factors)
            else:
                term = "*".join([str(size)] + factors)
            if not text:
                text = term if coefficient > 0 else "-" + term
            else:
                text += (" + " if coefficient > 0 else " - ") + term
        return text or "0"
