"""Exception types shared across the package.

Two broad families matter to callers (and to the CLI's exit codes):
``InputFormatError`` for malformed text/JSON and ``DomainError`` for
well-formed input outside an operation's domain.
"""


class OrdcopiesError(Exception):
    """Base class for all package errors."""


class InputFormatError(OrdcopiesError):
    """Malformed textual or JSON input."""


class OrdinalParseError(InputFormatError):
    pass


class ExprParseError(InputFormatError):
    pass


class PosetFormatError(InputFormatError):
    pass


class SchemaError(InputFormatError):
    """A JSON document does not match the expected schema."""


class DomainError(OrdcopiesError):
    """Input is well-formed but outside an operation's domain."""


class RangeError(DomainError):
    """A value lies outside the representable or required range."""


class DimensionError(DomainError):
    """Operand dimensions do not match the operation."""


class CapError(DomainError):
    """A configured size cap would be exceeded."""


class IdealError(DomainError):
    """An operation requires a positive (non-ideal) set."""


class FusionPreconditionError(IdealError):
    """A fusion precondition failed; carries the failing indices.

    ``n`` is the index of the offending input set, ``m`` the level at which
    the almost-inclusion test failed (``None`` when the set itself was bad).
    """

    def __init__(self, message, m=None, n=None):
        super().__init__(message)
        self.m = m
        self.n = n
