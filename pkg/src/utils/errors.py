"""
Johnson Lab - Error Types
Exception hierarchy shared by the algebra modules and the command-line tool.
"""

from typing import Optional


class JohnsonLabError(Exception):
    """Base class for all library errors."""


class ModelMismatch(JohnsonLabError):
    """Operands live over different alphabets or the wrong surface model."""


class Unsupported(JohnsonLabError):
    """Request is well formed but outside the implemented range."""


class InsufficientData(JohnsonLabError):
    """Not enough input data to determine the answer."""


class ConfigurationError(JohnsonLabError):
    """Invalid configuration file entry or command-line flag."""


class NotALieElement(JohnsonLabError):
    """A tensor polynomial could not be rewritten in the Lyndon basis."""


class InvariantViolation(JohnsonLabError):
    """
    An internal consistency check failed.

    Raised when a computation that must succeed for mathematical reasons
    does not (a solve that should be unique, a character that should be
    Weyl invariant, a derivation that should kill theta).
    """


class ParseError(JohnsonLabError):
    """
    Malformed serialized input.

    Attributes:
        location: Path to the offending field, e.g. ``$.terms[2].coef``
        offset: Character offset inside that field (or the document)
    """

    def __init__(self, message: str, location: str = '$', offset: Optional[int] = None):
        self.message = message
        self.location = location
        self.offset = offset
        where = location if offset is None else f"{location} (offset {offset})"
        super().__init__(f"{message} at {where}")
