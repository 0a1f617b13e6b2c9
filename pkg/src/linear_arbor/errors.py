"""
Exception hierarchy for linear_arbor.

Shape errors on inputs subclass ValueError so callers can catch them the usual way;
search and sampling outcomes that are not definite answers get their own classes.
"""

from typing import Any, Optional


class LinearArborError(Exception):
    """Base class for every error raised by this package."""


# Graph and coloring input errors

class DuplicateEdge(LinearArborError, ValueError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.u, self.v = u, v


class SelfLoop(LinearArborError, ValueError):
    def __init__(self, v: int):
        super().__init__(f"self-loop at vertex {v}")
        self.v = v


class VertexOutOfRange(LinearArborError, ValueError):
    def __init__(self, v: int, n: int):
        super().__init__(f"vertex {v} out of range for a graph on {n} vertices")
        self.v, self.n = v, n


class DegreeExceedsTwo(LinearArborError, ValueError):
    def __init__(self, v: int, degree: int):
        super().__init__(f"vertex {v} has degree {degree} > 2 in the view")
        self.v, self.degree = v, degree


class EmptyGraph(LinearArborError, ValueError):
    pass


class PartialColoring(LinearArborError, ValueError):
    def __init__(self, edge: int):
        super().__init__(f"edge {edge} is uncolored")
        self.edge = edge


class NotDegreeTwo(LinearArborError, ValueError):
    pass


class WeightOutOfRange(LinearArborError, ValueError):
    pass


class DomainError(LinearArborError, ValueError):
    pass


class InvalidParams(LinearArborError, ValueError):
    pass


class PreconditionViolation(LinearArborError, ValueError):
    pass


class FormatError(LinearArborError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line


# Search / sampling outcomes

class BudgetExceeded(LinearArborError):
    def __init__(self, nodes: int, elapsed: float):
        super().__init__(f"search budget exceeded after {nodes} nodes / {elapsed:.2f}s")
        self.nodes, self.elapsed = nodes, elapsed


class RoundBudgetExhausted(LinearArborError):
    def __init__(self, label: Any, rounds: int):
        super().__init__(f"resample budget exhausted after {rounds} rounds (last violated: {label})")
        self.label, self.rounds = label, rounds


class Infeasible(LinearArborError):
    pass


class GenerationFailed(LinearArborError):
    pass


class VerificationFailed(LinearArborError):
    """A produced coloring failed its certificate. Always a bug, never an expected outcome."""


class StageFailure(LinearArborError):
    def __init__(self, stage: str, cause: BaseException):
        super().__init__(f"stage '{stage}' failed: {type(cause).__name__}: {cause}")
        self.stage, self.cause = stage, cause
