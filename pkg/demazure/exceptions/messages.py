from typing import Final


class Messages:
    # Partitions, tabloids and regions.
    PARTITION_TOO_SHORT: Final[str] = (
        "A partition needs at least 2 parts, got {parts}.")
    PARTITION_NOT_DECREASING: Final[str] = (
        "Partition parts must be weakly decreasing and nonnegative, "
        "got {parts}.")
    COLUMN_LENGTH_OUT_OF_RANGE: Final[str] = (
        "Column lengths must lie in [1, {n}], got {lengths}.")
    COLUMN_COUNT_MISMATCH: Final[str] = (
        "Shape {shape} has {expected} columns, got {current}.")
    COLUMN_LENGTH_MISMATCH: Final[str] = (
        "Column {column} must hold {expected} values, got {current}.")
    VALUE_OUT_OF_RANGE: Final[str] = (
        "Value {value} at location {location} is outside [1, {n}].")
    COLUMN_NOT_STRICT: Final[str] = (
        "Values must strictly increase down column {column}, "
        "got {values}.")
    SHAPE_MISMATCH: Final[str] = (
        "Shape mismatch: expected {expected}, got {current}.")
    LOCATION_OUTSIDE_SHAPE: Final[str] = (
        "Location {location} is outside the shape {shape}.")
    NOT_A_TABLEAU: Final[str] = (
        "Tabloid {tabloid} is not a tableau (row {row} decreases).")
    ALREADY_TABLEAU: Final[str] = "Tabloid {tabloid} is already a tableau."
    SNAKE_OUT_OF_RANGE: Final[str] = (
        "Snake region needs 1 <= c < {width} and 1 <= r <= {height}, "
        "got r={row}, c={column}.")
    EMPTY_SEQUENCE: Final[str] = "Cannot scan an empty sequence."
    # Q-sets, Q-chains and the Bruhat order.
    QSET_INVALID: Final[str] = (
        "Q must be a nonempty strictly increasing subset of [1, {bound}], "
        "got {q}.")
    CHAIN_LENGTH_MISMATCH: Final[str] = (
        "A chain for Q={q} needs {expected} sets, got {current}.")
    CHAIN_CARDINALITY: Final[str] = (
        "Set P_{index} must have {expected} elements, got {current}.")
    CHAIN_NOT_NESTED: Final[str] = (
        "Chain sets must be nested: P_{index} is not contained in "
        "P_{next}.")
    CHAIN_VALUE_OUT_OF_RANGE: Final[str] = (
        "Chain value {value} is outside [1, {n}].")
    QPERM_INVALID: Final[str] = (
        "{perm} is not a Q-permutation of [1, {n}] for Q={q}.")
    QSET_MISMATCH: Final[str] = (
        "Q-set mismatch: expected {expected}, got {current}.")
    SHAPE_NOT_COVERED: Final[str] = (
        "Column lengths {lengths} of the shape are not all in Q={q}.")
    REFLECTION_INDICES: Final[str] = (
        "Reflection needs 1 <= i < j <= {n}, got i={i}, j={j}.")
    NOT_STRICTLY_BELOW: Final[str] = (
        "Chain {target} is not strictly below {source} in Bruhat order.")
    COLUMN_NOT_BELOW: Final[str] = (
        "Column {column} is not dominated by Y(P_{index}) = {bound}.")
    # Matrices.
    MATRIX_EMPTY: Final[str] = "A matrix needs at least one row and column."
    MATRIX_RAGGED: Final[str] = (
        "Row {row} has {current} entries, expected {expected}.")
    MATRIX_NOT_SQUARE: Final[str] = (
        "Expected a square matrix, got {rows}x{cols}.")
    MATRIX_DIMENSION: Final[str] = (
        "Dimension mismatch: expected {expected}, got {current}.")
    MATRIX_SINGULAR: Final[str] = "Matrix is singular."
    MATRIX_BAD_ENTRY: Final[str] = "Cannot read {entry!r} as a rational."
    MINOR_ROWS_INVALID: Final[str] = (
        "Initial minor of size {size} needs {size} distinct rows in "
        "[1, {n}], got {rows}.")
    INDEX_OUT_OF_RANGE: Final[str] = (
        "Index {index} is outside [1, {bound}].")
    INVALID_OPERATION: Final[str] = (
        "Column operation {operation} does not preserve the Q-flag.")
    PARAMETER_OUT_OF_RANGE: Final[str] = (
        "Path parameter t={t} must satisfy 0 <= t < 1/2.")
    NOT_UPPER_TRIANGULAR: Final[str] = (
        "Expected an invertible upper-triangular matrix.")
    # Characters.
    EXPONENTS_INVALID: Final[str] = (
        "Exponent vector {exponents} needs {n} nonnegative entries.")
    VARIABLE_COUNT_MISMATCH: Final[str] = (
        "Polynomials in {expected} and {current} variables do not mix.")
    NOT_A_PERMUTATION: Final[str] = (
        "{perm} is not a permutation of [1, {n}].")
    # Verification.
    MASTER_IDENTITY_FAILED: Final[str] = (
        "Master identity fails for {tabloid} on region {region}: "
        "determinant {determinant}, shuffle sum {total}.")
    PATH_MISSING: Final[str] = (
        "No location of P(T;{row},{column}) continues the region of "
        "{tabloid}.")
    ALREADY_DEMAZURE: Final[str] = (
        "Tableau {tabloid} is already Demazure for chain {chain}.")
    NOT_A_VIOLATION: Final[str] = (
        "Location {location} of {tabloid} does not violate the "
        "lambda-key of {chain}.")
    NOT_PROPORTIONAL: Final[str] = (
        "Monomial of {tabloid} breaks the common scale factor {factor}.")
    DETERMINANT_MISMATCH: Final[str] = (
        "Elimination gives determinant {elimination}, cofactor expansion "
        "gives {expansion}.")
    # Command line.
    UNKNOWN_COMMAND: Final[str] = "Unknown command '{command}'."
    MISSING_INPUT: Final[str] = "Command '{command}' needs --{option}."
    MALFORMED_JSON: Final[str] = "Malformed JSON for {field}: {error}."
    MISSING_SEED: Final[str] = (
        "Command '{command}' samples matrices: pass --seed or set "
        "DEMAZURE_SEED.")
    BAD_ARGUMENTS: Final[str] = "Invalid arguments: {error}."
