"""Exception types shared across the package."""

from __future__ import annotations


class ChoiceCtxError(Exception):
    """Base class for all errors raised by this package."""


class UnboundVariable(ChoiceCtxError):
    """A restriction asked for a variable outside the assignment's domain."""


class UnknownContext(ChoiceCtxError):
    """A context was referenced that is not part of the scenario's cover."""


class VariableNotInContext(ChoiceCtxError):
    """A variable was queried against a context that does not contain it."""


class DomainMismatch(ChoiceCtxError):
    """An assignment's domain does not match the expected variable set."""


class TooLarge(ChoiceCtxError):
    """An exhaustive enumeration would exceed the configured variable bound."""


class TimeBudgetExceeded(ChoiceCtxError):
    """A cooperative search ran past its wall-clock deadline.

    ``partial_sections`` holds the sections found before expiry; the result
    is inconclusive, not a verdict.
    """

    def __init__(self, message: str = "time budget exceeded", partial_sections=()):
        super().__init__(message)
        self.partial_sections = tuple(partial_sections)


class ModelSyntaxError(ChoiceCtxError):
    """A model document is not syntactically valid JSON."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + loc)
        self.line = line
        self.column = column


class ModelSemanticError(ChoiceCtxError):
    """A model document is well-formed JSON but violates the format rules."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class PropositionSyntaxError(ChoiceCtxError):
    """A formula does not conform to the proposition grammar."""

    def __init__(self, message: str, position: int, line: int | None = None):
        where = f"line {line}, " if line is not None else ""
        super().__init__(f"{message} ({where}position {position})")
        self.position = position
        self.line = line


class UnknownVariable(ChoiceCtxError):
    """A formula mentions a variable the scenario does not declare."""


class NotMeasurable(ChoiceCtxError):
    """A formula's variables do not fit inside any single cover context."""


class NotContradictory(ChoiceCtxError):
    """The inequality was invoked on formulas that are jointly satisfiable."""
