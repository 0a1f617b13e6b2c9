from .coloring import degree_t_coloring, degree_two_coloring, list_edge_color
from .config import PipelineConfig, q_of_d
from .cycles import CycleBreakPlan, break_cycles, cycle_windows
from .reserve import ReserveSplit, reserve_colors, reserve_events, sample_reserve
from .solve import SolveResult, recolor_and_merge, solve
from .sparsify import SparsifiedLists, color_support_girths, sample_sparsify, sparsify_events, sparsify_high_girth

__all__ = [
    "CycleBreakPlan",
    "PipelineConfig",
    "ReserveSplit",
    "SolveResult",
    "SparsifiedLists",
    "break_cycles",
    "color_support_girths",
    "cycle_windows",
    "degree_t_coloring",
    "degree_two_coloring",
    "list_edge_color",
    "q_of_d",
    "recolor_and_merge",
    "reserve_colors",
    "reserve_events",
    "sample_reserve",
    "sample_sparsify",
    "solve",
    "sparsify_events",
    "sparsify_high_girth",
]
