class DemazureError(Exception):
    """Base exception class for the demazure package."""
    pass


class ValidationError(DemazureError):
    """Exception raised when an input is malformed or a precondition 
    of an operation is violated.
    """
    pass


class ShapeError(ValidationError):
    """Exception raised for invalid partitions, tabloids and regions."""
    pass


class ChainError(ValidationError):
    """Exception raised for invalid Q-sets, Q-chains and Q-permutations,
    or when a Bruhat-order precondition does not hold.
    """
    pass


class MatrixError(ValidationError):
    """Exception raised for invalid matrices and matrix parameters."""
    pass


class VerificationError(DemazureError):
    """Exception raised when a machine-checked property fails."""
    pass
