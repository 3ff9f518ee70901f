"""Exception types shared across the package."""

from __future__ import annotations


class TrisectError(Exception):
    """Base class for all package errors."""


class MalformedCurveError(TrisectError):
    """A curve word is structurally invalid (empty, bad pair index, ...)."""


class SlideRejectedError(TrisectError):
    """A requested handle slide could not be certified or validated."""


class NotStandardError(TrisectError):
    """An operation requires the alpha and beta systems in standard form.

    Run summand splitting (`classify.split_summands`) first, or supply a
    diagram whose alpha curves are the A-handle cores and whose beta
    curves are the B-handle cores.
    """


class StuckError(TrisectError):
    """Summand splitting made no further progress.

    Carries the partial result so callers can report what was achieved.
    """

    def __init__(self, message: str, diagram=None, events=None):
        super().__init__(message)
        self.diagram = diagram
        self.events = list(events or [])


class IrreducibleError(TrisectError):
    """Matrix reduction did not reach the recognized block forms."""

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class ClassificationNotGuaranteedError(TrisectError):
    """Classification stopped honestly short of a full decomposition."""

    def __init__(self, message: str, detail=None):
        super().__init__(message)
        self.detail = detail


class ConsistencyError(TrisectError):
    """Two internal computation routes disagreed; input is malformed."""


class ParseError(TrisectError):
    """Diagram file syntax error with position information."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__("line %d, column %d: %s" % (line, column, message))
        self.line = line
        self.column = column
