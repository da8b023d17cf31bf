"""Exception hierarchy shared across the package.

The CLI maps these onto stable exit codes, so the distinctions matter:
parse errors (bad text), validation errors (well-formed text describing an
invalid element), constraint errors (parameters outside a family's range),
and domain errors (arguments outside an operation's domain).
"""


class ParseError(ValueError):
    """Text that does not conform to a documented input grammar."""


class ValidationError(ValueError):
    """Breakpoint data that does not describe a valid group element.

    ``code`` is one of ``"empty"``, ``"endpoint"``, ``"monotone"``,
    ``"nadic"``, ``"slope"``.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class ConstraintError(ValueError):
    """Parameters that violate a construction's stated constraints."""


class BaseMismatchError(ConstraintError):
    """Two values with different bases N used in one operation."""


class DomainError(ValueError):
    """Argument outside the domain of an operation."""
