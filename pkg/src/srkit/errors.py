"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""

from __future__ import annotations


class SRError(Exception):
    code = "E_GENERIC"


class VertexOutOfRange(SRError):
    code = "E_VERTEX_RANGE"


class EmptyFacetList(SRError):
    code = "E_EMPTY_FACETS"


class UncoveredVertex(SRError):
    code = "E_UNCOVERED_VERTEX"


class FaceNotInComplex(SRError):
    code = "E_FACE_NOT_IN_COMPLEX"


class DualUndefined(SRError):
    code = "E_DUAL_UNDEFINED"


class SizeCapExceeded(SRError):
    code = "E_SIZE_CAP"


class NoGenerators(SRError):
    code = "E_NO_GENERATORS"


class NotBuchsbaum(SRError):
    code = "E_NOT_BUCHSBAUM"


class ParameterRange(SRError, ValueError):
    code = "E_PARAMETER_RANGE"


class DegenerateDegrees(SRError, ValueError):
    code = "E_DEGENERATE_DEGREES"


class PreconditionFailed(SRError):
    code = "E_PRECONDITION"


class GenericityExhausted(SRError):
    code = "E_GENERICITY_EXHAUSTED"


class NotNested(SRError):
    code = "E_NOT_NESTED"


class TargetOutOfRange(SRError):
    code = "E_TARGET_RANGE"


class VerificationFailed(SRError):
    code = "E_VERIFICATION"


class ParseError(SRError):
    code = "E_PARSE"

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
