"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SmcError(Exception):
    """Base class for all errors raised by smcstrict."""


class SignatureError(SmcError):
    """A signature declares the same name twice."""


class ResolveError(SmcError):
    """A name does not resolve against the signature or instance table."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        super().__init__(message if line is None else f"{line}:{column}: {message}")


class IllTyped(SmcError):
    """A 1-cell expression does not typecheck.

    ``path`` locates the offending sub-expression as a tuple of child
    labels (``"outer"``, ``"inner"``, ``"left"``, ``"right"``) from the root.
    """

    def __init__(self, message: str, path: tuple[str, ...] = ()):
        self.reason = message
        self.path = tuple(path)
        where = "/".join(self.path) or "<root>"
        super().__init__(f"{message} (at {where})")


class EndpointMismatch(SmcError):
    """Two normal forms or instance cells cannot be composed or summed."""


class BoundaryMismatch(SmcError):
    """Two 2-cells (or two diagram paths) have incompatible boundaries."""


class NotStructural(SmcError):
    """A 2-cell mentions a generating 2-cell where only canonical cells are allowed."""


class MissingAssignment(SmcError):
    """An instance has no value for a generator it is asked to evaluate."""


class NonDegenerate(SmcError):
    """A 2-cell in a discrete instance joins two different values."""


class InvalidFunctor(SmcError):
    """Monoidal functor data fails a coherence check."""


class ParseError(SmcError):
    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        text = f"{line}:{column}: {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)
