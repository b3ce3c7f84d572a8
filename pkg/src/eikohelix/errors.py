"""Exception types shared across the package."""

from __future__ import annotations


class EikohelixError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------- parsing


class DslError(EikohelixError):
    """Base class for expression / spec-document parsing errors.

    ``position`` is a 0-based character offset into the source text when
    known, else None.
    """

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class IllegalCharacter(DslError):
    def __init__(self, char: str, position: int):
        self.char = char
        super().__init__(f"illegal character {char!r}", position)


class ExprSyntaxError(DslError):
    pass


class UnknownIdentifier(DslError):
    def __init__(self, name: str, position: int | None = None):
        self.name = name
        super().__init__(f"unknown identifier {name!r}", position)


class CoordOutOfRange(DslError):
    def __init__(self, index: int, dimension: int, position: int | None = None):
        self.index = index
        self.dimension = dimension
        super().__init__(
            f"coordinate x{index} out of range for dimension {dimension}", position
        )


class WrongSymbolKind(DslError):
    pass


class SpecDocumentError(DslError):
    """Base for errors in whole curve-spec documents; carries a line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message} (line {line})"
        Exception.__init__(self, message)
        self.position = None


class MissingField(SpecDocumentError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"missing required field {name!r}")


class DimensionMismatch(SpecDocumentError):
    pass


# ---------------------------------------------------------------- evaluation


class EvalError(EikohelixError):
    """Base class for numeric evaluation failures."""


class EvalDomainError(EvalError):
    """sqrt/ln/pow applied outside its real domain."""


class EvalOverflow(EvalError):
    """Evaluation produced a non-finite value."""


class JetDivisionByZero(EvalError):
    """Division by a jet whose value coefficient is (near) zero."""


class EmptyInput(EikohelixError):
    """A reduction was asked of an empty value list."""


# ---------------------------------------------------------------- geometry


class FrameError(EikohelixError):
    """Base class for Frenet-frame construction failures."""

    def __init__(self, message: str, s: float | None = None):
        self.s = s
        if s is not None:
            message = f"{message} (at s = {s!r})"
        super().__init__(message)


class NotRegular(FrameError):
    """Curve speed fell below the degeneracy threshold."""


class DegenerateCurve(FrameError):
    """The i-th derivative is linearly dependent on its predecessors."""

    def __init__(self, index: int, s: float | None = None):
        self.index = index
        super().__init__(f"derivative {index} linearly dependent on predecessors", s)


class DegenerateCurvature(FrameError):
    """A curvature value fell below the degeneracy threshold."""


class InsufficientOrder(EikohelixError):
    """A jet does not carry enough derivative coefficients for the operation."""
