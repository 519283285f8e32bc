"""Exception types.

Input problems derive from :class:`KronError` (and ``ValueError``).
Mathematically negative answers (no factorization, no square root) are
reported through :class:`NegativeResult` so callers can tell the two apart.
"""


class KronError(ValueError):
    """Base class for invalid input."""


class InvalidPartitionError(KronError):
    pass


class ZeroMatrixError(KronError):
    pass


class DimensionError(KronError):
    pass


class FieldError(KronError):
    pass


class ParseError(KronError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class NegativeResult(Exception):
    """The question was well posed and the answer is no."""


class NotFactorizable(NegativeResult):
    def __init__(self, certificate):
        self.certificate = certificate
        super().__init__(
            "not a Kronecker product for this partition "
            f"(relative rank-1 residual {certificate.relative_residual:.17g})"
        )


class NoRoot(NegativeResult):
    def __init__(self, reason, feasibility=None):
        self.reason = reason
        self.feasibility = feasibility
        super().__init__(reason)
