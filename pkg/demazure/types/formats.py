from dataclasses import dataclass
from typing import Final


@dataclass(frozen=True, init=False)
class Formats:
    """Represents the JSON keys and text templates of the wire formats."""
    N: Final[str] = "n"
    SHAPE: Final[str] = "shape"
    COLUMNS: Final[str] = "columns"
    Q: Final[str] = "q"
    SETS: Final[str] = "sets"
    CHAIN: Final[str] = "chain"
    TABLOID: Final[str] = "tabloid"
    MATRIX: Final[str] = "matrix"
    REGION: Final[str] = "region"
    COEFFICIENT: Final[str] = "coefficient"
    TERMS: Final[str] = "terms"
    SCAN: Final[str] = "scan"
    PATHS: Final[str] = "paths"
    KEY: Final[str] = "key"
    DEMAZURE: Final[str] = "demazure"
    VIOLATIONS: Final[str] = "violations"
    TABLEAUX: Final[str] = "tableaux"
    COUNT: Final[str] = "count"
    POLYNOMIAL: Final[str] = "polynomial"
    DIMENSION: Final[str] = "dimension"
    PIVOTS: Final[str] = "pivots"
    CELL: Final[str] = "cell"
    SEED: Final[str] = "seed"
    SAMPLES: Final[str] = "samples"
    OK: Final[str] = "ok"
    RANK: Final[str] = "rank"
    BASIS_SIZE: Final[str] = "basis_size"
    SIGN: Final[str] = "sign"
    FAILURES: Final[str] = "failures"
    LOCATION: Final[str] = "({row},{column})"
    VARIABLE: Final[str] = "y{index}"
    POWER: Final[str] = "y{index}^{exponent}"
