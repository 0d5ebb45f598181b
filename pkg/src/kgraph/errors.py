"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class KGraphError(Exception):
    """Base class for all errors raised by :mod:`kgraph`."""


class ValidationError(KGraphError, ValueError):
    """An input object violates a structural invariant.

    ``violations`` lists every problem found, not only the first one.
    """

    def __init__(self, message: str, violations: list | None = None):
        super().__init__(message)
        self.violations = list(violations or [])


# graphs
class DuplicateIdentifier(ValidationError):
    pass


class DanglingEndpoint(ValidationError):
    pass


class NotComposable(ValidationError):
    def __init__(self, index: int, message: str | None = None):
        super().__init__(message or f"letters {index - 1} and {index} are not composable", [index])
        self.index = index


class IntertwiningViolation(ValidationError):
    pass


class Disconnected(KGraphError):
    pass


# coloured graphs
class MissingColour(ValidationError):
    pass


class ColourOutOfRange(ValidationError):
    pass


class ColourMismatch(ValidationError):
    pass


class CornerMismatch(ValidationError):
    def __init__(self, which: str, message: str | None = None):
        super().__init__(message or f"corner mismatch: {which}", [which])
        self.which = which


class NoCandidate(KGraphError):
    def __init__(self, path):
        super().__init__(f"no square candidate for path {path}")
        self.path = path


class Ambiguous(KGraphError):
    def __init__(self, path, candidates):
        super().__init__(f"{len(candidates)} square candidates for path {path}")
        self.path = path
        self.candidates = list(candidates)


class SearchLimitExceeded(KGraphError):
    pass


# textiles
class InjectivityViolation(ValidationError):
    def __init__(self, f1: str, f2: str):
        super().__init__(f"F-edges {f1!r} and {f2!r} have the same (p, q, r, s) data", [(f1, f2)])
        self.pair = (f1, f2)


class IdentifierCollision(KGraphError):
    def __init__(self, names):
        super().__init__(f"E-edges and F-vertices share names: {sorted(names)}")
        self.names = sorted(names)


class IncompleteSquares(KGraphError):
    pass


class InternalConsistencyError(KGraphError):
    """Two computations that must agree gave different answers."""


# presentations
class BudgetExceeded(KGraphError):
    """Simplification stopped early; ``presentation`` holds the best result so far."""

    def __init__(self, presentation, message: str = "simplification budget exceeded"):
        super().__init__(message)
        self.presentation = presentation


# homology / cohomology
class NotAComplex(KGraphError):
    pass


class UnknownBasisElement(KGraphError):
    pass


class EnumerationLimitExceeded(KGraphError):
    pass


class UnsupportedCoefficients(KGraphError):
    pass


class CoefficientParseError(KGraphError, ValueError):
    pass


class ZeroModulus(CoefficientParseError):
    pass


class TooLarge(KGraphError):
    pass


# documents
class DocumentSyntaxError(KGraphError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(KGraphError):
    def __init__(self, pointer: str, message: str | None = None):
        super().__init__(message or f"schema error at {pointer!r}")
        self.pointer = pointer
