# =============================================================================
# models/errors.py
# =============================================================================
# Purpose:
# The exception hierarchy raised by the library, and the ErrorReport model
# the CLI prints when it fails with --json.
#
# Budget exhaustion is not an error: searches report it in their result
# models instead.
# =============================================================================

from typing import Any

from pydantic import BaseModel


class ForgeError(Exception):
    """Base class for every domain error."""

    code: int = 1


class PresentationSyntaxError(ForgeError):
    """Raised when `.grp`, word or graph text does not parse."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DuplicateGeneratorError(ForgeError):
    pass


class UnknownSymbolError(ForgeError):
    pass


class PreconditionError(ForgeError):
    """An operation was called outside its precondition."""


class DimensionMismatchError(ForgeError):
    pass


class TransversalError(ForgeError):
    """A transversal disagrees with the coset table it is paired with."""


class ParityError(ForgeError):
    """Euler characteristic bookkeeping produced an odd value."""


class NoSurjectionError(ForgeError):
    """An abelianization had no free part to project onto."""


# -----------------------------------------------------------------------------
# ErrorReport: JSON shape of a failure
# -----------------------------------------------------------------------------
class ErrorReport(BaseModel):
    code: int
    message: str
    data: Any | None = None

    @classmethod
    def from_exception(cls, exc: ForgeError) -> "ErrorReport":
        return cls(code=exc.code, message=str(exc), data={"type": type(exc).__name__})
