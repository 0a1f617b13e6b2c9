"""Linear list edge colorings: a randomized certified pipeline, exact oracles and experiments."""

from .colors import EdgeColoring, ListAssignment
from .graph import EdgeSubset, Graph
from .pipeline import PipelineConfig, solve
from .verify import check_linear

__all__ = ["EdgeColoring", "EdgeSubset", "Graph", "ListAssignment", "PipelineConfig", "check_linear", "solve"]
