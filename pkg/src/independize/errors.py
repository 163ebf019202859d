"""Exception types raised across the package."""

from __future__ import annotations


class IndependizeError(Exception):
    """Base class for every error raised by this package."""


class ParseError(IndependizeError):
    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset(), source: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        self.source = source
        where = f"{source}:" if source else ""
        text = f"{where}{line}:{column}: {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(text)


class UndefinedSymbolError(IndependizeError, KeyError):
    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"valuation does not assign symbol {symbol!r}")

    def __str__(self) -> str:
        return self.args[0]


class ResourceLimitError(IndependizeError):
    pass


class NotEntailedError(IndependizeError):
    """Raised when an operation requires an entailment that does not hold."""

    def __init__(self, message: str, countermodel: dict[str, bool]):
        self.countermodel = countermodel
        super().__init__(message)


class CertificationError(IndependizeError):
    """A produced theory failed equivalence or independence checking.

    ``direction`` is one of ``"input=>output"``, ``"output=>input"`` or
    ``"independence"``.
    """

    def __init__(self, message: str, direction: str, formula, countermodel: dict[str, bool] | None = None):
        self.direction = direction
        self.formula = formula
        self.countermodel = countermodel
        super().__init__(message)


class SizeError(IndependizeError):
    pass


class DisjointnessError(IndependizeError):
    pass


class HypothesisViolationError(IndependizeError):
    def __init__(self, message: str, formula, certificate):
        self.formula = formula
        self.certificate = certificate
        super().__init__(message)


class PartitionError(IndependizeError, ValueError):
    pass
