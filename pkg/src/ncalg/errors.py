"""
Exception hierarchy shared by every package.
Library code raises these; the CLI and the HTTP API map them to exit codes and responses.
"""


class AlgebraError(ValueError):
    """Base class for domain errors."""


class ZeroPolynomialError(AlgebraError):
    """Raised when an operation needs a nonzero polynomial."""


class NilpotencyError(AlgebraError):
    """Raised when a derivation does not vanish on an input within the iteration cap."""


class NormalFormError(AlgebraError):
    """Raised when a derivation is not of the form D(X) = 0, D(Y) = f(X)."""


class PermissibilityError(AlgebraError):
    """Raised when a bracketed word is not permissible."""


class DecodeError(AlgebraError):
    """Raised when a word is not the leading monomial of a boxed generator."""


class RewriteError(AlgebraError):
    """Raised when a polynomial cannot be written in the generators of a table."""


class WeightBoundError(AlgebraError):
    """Raised when a requested weight exceeds a table bound or the oracle cap."""


class KernelMismatchError(AlgebraError):
    """Raised when two derivations were expected to share a kernel and do not."""


class ConsistencyError(AlgebraError, RuntimeError):
    """Raised when a computed result contradicts the construction it came from."""
