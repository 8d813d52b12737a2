"""Engine exception hierarchy"""

from typing import Optional


class EngineError(Exception):
    """Base class for every error raised by the engine"""


class InputError(EngineError):
    """Malformed input: dimension mismatch, bad JSON, unknown identifiers"""


class ParseError(InputError):
    """Syntax error in polynomial text, with 1-based position"""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DomainError(EngineError):
    """Well-formed input outside the domain of the operation"""


class PreconditionError(DomainError):
    """A documented precondition of the operation does not hold"""


class GenericityError(EngineError):
    """Input violates the genericity an Euler characteristic count relies on"""


class DegenerateSampleError(EngineError):
    """A random numeric sample hit a degenerate configuration; resample and retry"""

    def __init__(self, message: str, seed: Optional[int] = None):
        super().__init__(message)
        self.seed = seed


class DataInconsistencyError(EngineError):
    """Intersection data evaluates to a non-integer Euler characteristic"""
