from random import Random
from typing import Final, List, Optional

from demazure.linalg.rational_matrix import RationalMatrix


class MatrixSampler:
    """Draws random integer matrices from a single seeded generator.

    Attributes:
    -----------
        ENTRY_BOUND (Final[int]): Entries are drawn uniformly from 
            [-ENTRY_BOUND, ENTRY_BOUND].
    """

    ENTRY_BOUND: Final[int] = 9

    def __init__(self, seed: int) -> None:
        self.__seed: int = seed
        self.__random: Random = Random(seed)

    @property
    def seed(self) -> int:
        """Returns the seed the sampler was created with."""
        return self.__seed

    def entry(self) -> int:
        return self.__random.randint(-self.ENTRY_BOUND, self.ENTRY_BOUND)

    def nonzero_entry(self) -> int:
        while not (value := self.entry()):
            pass
        return value

    def choice(self, items: list):
        return self.__random.choice(items)

    def integer_matrix(
            self, rows: int, columns: Optional[int] = None
        ) -> RationalMatrix:
        """Draws a matrix with independent uniform integer entries."""
        columns = rows if columns is None else columns
        return RationalMatrix([
            [self.entry() for _ in range(columns)] for _ in range(rows)])

    def invertible_matrix(self, size: int) -> RationalMatrix:
        """Draws integer matrices until one has nonzero determinant."""
        while not (matrix := self.integer_matrix(size)).determinant():
            pass
        return matrix

    def upper_triangular(
            self, size: int, unit: bool = False) -> RationalMatrix:
        """Draws an invertible upper-triangular integer matrix.

        Parameters:
        -----------
            size (int): The size n.
            unit (bool): Whether the diagonal is all ones. 
                Defaults to False.

        Returns:
        --------
            RationalMatrix: A matrix b of the Borel subgroup B.
        """
        rows: List[List[int]] = []
        for i in range(size):
            diagonal = 1 if unit else self.nonzero_entry()
            rows.append([0] * i + [diagonal] + [
                self.entry() for _ in range(size - i - 1)])
        return RationalMatrix(rows)
