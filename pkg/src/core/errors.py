"""
Domain errors raised by the synthesis toolkit.

Verdict-producing operations (validation, condition checks, game solving)
return reports instead of raising; everything below signals unusable input
or an exceeded resource cap.
"""

from typing import Optional


class RdesError(Exception):
    """Base class for all toolkit errors."""


class ModelError(RdesError, ValueError):
    """A model document or in-memory model is malformed."""


class ModelSyntaxError(ModelError):
    """
    The model text is not a well-formed document.

    Args:
        message: Parser message
        line: 1-based line of the error
        column: 1-based column of the error
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class DeterminismError(ModelError):
    """Two transitions share the same key."""


class UndeclaredSymbolError(ModelError):
    """A transition references a state or event that was never declared."""


class EmptyModelError(ModelError):
    """The model declares no states."""


class ValidationError(ModelError):
    """
    A plant failed validation.

    Args:
        message: Summary of the failure
        report: The ValidationReport that failed
    """

    def __init__(self, message: str, report: Optional[object] = None):
        super().__init__(message)
        self.report = report


class SpecificationError(RdesError, ValueError):
    """A specification transducer is empty or not input-complete."""


class ResourceLimitError(RdesError, RuntimeError):
    """A configured depth, pattern or node cap was exceeded."""


class ModelMismatchError(RdesError, ValueError):
    """A supervisor or script does not belong to the given plant."""


class StrategyError(RdesError, RuntimeError):
    """A strategy precondition or consistency check failed."""
