from .experiments import (
    CONCENTRATION_COLUMNS,
    SUCCESS_COLUMNS,
    THRESHOLD_COLUMNS,
    ExperimentRecord,
    binomial_tail,
    clopper_pearson,
    run_concentration,
    run_success_rate,
    run_thresholds,
    trial_streams,
    write_csv,
)
from .generators import GRAPH_FAMILIES, LIST_MODES, gen_graph, gen_lists, random_regular

__all__ = [
    "CONCENTRATION_COLUMNS",
    "GRAPH_FAMILIES",
    "LIST_MODES",
    "SUCCESS_COLUMNS",
    "THRESHOLD_COLUMNS",
    "ExperimentRecord",
    "binomial_tail",
    "clopper_pearson",
    "gen_graph",
    "gen_lists",
    "random_regular",
    "run_concentration",
    "run_success_rate",
    "run_thresholds",
    "trial_streams",
    "write_csv",
]
