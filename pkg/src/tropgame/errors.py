"""Structured errors with stable codes and distinct CLI exit codes."""

from __future__ import annotations


class TropgameError(Exception):
    """Base class for all recoverable errors raised by this package."""

    code = "ERROR"
    exit_code = 1

    def __init__(self, message: str, **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def to_json(self) -> dict:
        out = {"code": self.code, "message": self.message}
        for key, value in sorted(self.context.items()):
            out[key] = value
        return out


class SchemaError(TropgameError):
    """Input does not match the expected JSON schema or value domain."""

    code = "SCHEMA_VIOLATION"
    exit_code = 10


class DuplicateMonomialError(TropgameError):
    code = "DUPLICATE_MONOMIAL"
    exit_code = 11


class MultilinearityError(TropgameError):
    code = "MULTILINEARITY"
    exit_code = 12


class DimensionMismatchError(TropgameError):
    code = "DIMENSION_MISMATCH"
    exit_code = 13


class EmptySystemError(TropgameError):
    code = "EMPTY_SYSTEM"
    exit_code = 14


class ZeroScalarError(TropgameError):
    """Valuation or leading coefficient requested for an identically zero series."""

    code = "ZERO_SCALAR"
    exit_code = 15


class NonSquareError(TropgameError):
    code = "NON_SQUARE"
    exit_code = 16


class NonBinomialError(TropgameError):
    """An initial form has a number of terms other than two.

    Carries the offending generator index; callers use this as the dispatch
    point from the binomial pipeline to collision-fiber analysis.
    """

    code = "NON_BINOMIAL"
    exit_code = 17

    def __init__(self, message: str, generator_index: int, term_count: int):
        super().__init__(
            message, generator_index=generator_index, term_count=term_count
        )
        self.generator_index = generator_index
        self.term_count = term_count


class SizeCapError(TropgameError):
    code = "SIZE_CAP"
    exit_code = 18


class ZeroEntryError(TropgameError):
    code = "ZERO_ENTRY"
    exit_code = 19


class BasePointError(TropgameError):
    """Base point does not solve the system it is supposed to solve."""

    code = "NOT_A_SOLUTION"
    exit_code = 20


class UnsupportedIdealError(TropgameError):
    """The local ideal falls outside the supported elimination class."""

    code = "UNSUPPORTED"
    exit_code = 21


class InvalidParamsError(TropgameError):
    code = "INVALID_PARAMS"
    exit_code = 22


class InputFileError(TropgameError):
    code = "FILE_ERROR"
    exit_code = 23
