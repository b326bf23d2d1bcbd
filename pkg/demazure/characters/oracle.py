from typing import Dict, List, Optional, Sequence

from demazure.characters.polynomial import Polynomial
from demazure.exceptions.exceptions import ChainError
from demazure.exceptions.messages import Messages
from demazure.tableaux.partition import Partition
from demazure.types.types import Types


def _check_index(polynomial: Polynomial, index: int) -> None:
    if not 1 <= index < polynomial.n:
        raise ChainError(Messages.INDEX_OUT_OF_RANGE.format(
            index=index, bound=polynomial.n - 1))


def divided_difference(polynomial: Polynomial, index: int) -> Polynomial:
    """Applies (p - s_i p) / (y_i - y_{i+1}) term by term.

    The term y_i^a y_{i+1}^b becomes the sum of y_i^(a-1-k) y_{i+1}^(b+k) 
    for 0 <= k < a - b when a > b, the negated sum with a and b 
    exchanged when a < b, and 0 when a = b.

    Parameters:
    -----------
        polynomial (Polynomial): The polynomial p.
        index (int): The index i, 1 <= i < n.

    Returns:
    --------
        Polynomial: The exact quotient.
    """
    _check_index(polynomial, index)
    terms: Dict[Types.Exponents, int] = {}
    for exponents, coefficient in polynomial.items():
        high, low = exponents[index - 1], exponents[index]
        sign = 1
        if high < low:
            high, low, sign = low, high, -1
        for k in range(high - low):
            values = list(exponents)
            values[index - 1], values[index] = high - 1 - k, low + k
            key = tuple(values)
            terms[key] = terms.get(key, 0) + sign * coefficient
    return Polynomial(polynomial.n, terms)


def isobaric_divided_difference(
        polynomial: Polynomial, index: int) -> Polynomial:
    """Applies the Demazure operator p -> divided_difference(y_i p, i)."""
    _check_index(polynomial, index)
    variable = [0] * polynomial.n
    variable[index - 1] = 1
    return divided_difference(
        Polynomial.monomial(variable) * polynomial, index)


def _check_permutation(perm: Sequence[int], n: int) -> None:
    if sorted(perm) != list(range(1, n + 1)):
        raise ChainError(Messages.NOT_A_PERMUTATION.format(
            perm=list(perm), n=n))


def reduced_word(perm: Sequence[int], smallest: bool = True) -> Types.Permutation:
    """Factors a permutation w = s_a1 ... s_al by peeling left descents.

    The value i is a left descent of w when i + 1 stands left of i in 
    its one-line form; then w = s_i (s_i w), where s_i w exchanges the 
    values i and i + 1.

    Parameters:
    -----------
        perm (Sequence[int]): The permutation w in one-line form.
        smallest (bool): Whether to peel the smallest descent at each 
            step rather than the largest. Defaults to True.

    Returns:
    --------
        Types.Permutation: The word (a_1, ..., a_l).
    """
    _check_permutation(perm, len(perm))
    current: List[int] = list(perm)
    word: List[int] = []
    while True:
        position = {value: index for index, value in enumerate(current)}
        descents = [
            value for value in range(1, len(current))
            if position[value + 1] < position[value]]
        if not descents:
            return tuple(word)
        value = min(descents) if smallest else max(descents)
        word.append(value)
        current[position[value]], current[position[value + 1]] = (
            value + 1, value)


def demazure_oracle(
        shape: Partition, perm: Sequence[int],
        word: Optional[Sequence[int]] = None
    ) -> Polynomial:
    """Computes the Demazure character pi_a1(...(pi_al(y^lambda))).

    Parameters:
    -----------
        shape (Partition): The shape lambda.
        perm (Sequence[int]): The permutation w in one-line form.
        word (Optional[Sequence[int]]): A reduced word of w. Defaults 
            to None, the word of `reduced_word`.

    Returns:
    --------
        Polynomial: The character.

    Raises:
    -------
        ChainError: If w is not a permutation of [n].
    """
    _check_permutation(perm, shape.n)
    result = Polynomial.monomial(shape.parts)
    for index in reversed(word if word is not None else reduced_word(perm)):
        result = isobaric_divided_difference(result, index)
    return result
