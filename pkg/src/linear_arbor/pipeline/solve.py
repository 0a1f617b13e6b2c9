import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, TypeVar

import numpy as np

from ..colors import EdgeColoring, ListAssignment, restrict, vertex_list
from ..errors import BudgetExceeded, Infeasible, LinearArborError, PreconditionViolation, StageFailure, VerificationFailed
from ..exact import Verdict, decide_linear_colorable
from ..graph import EdgeSubset, Graph, subgraph
from ..settings import load_yaml
from ..verify import MonochromaticCycle, check_from_lists, check_linear, check_degree_t, monochromatic_cycles
from .coloring import degree_two_coloring, list_edge_color
from .config import PipelineConfig
from .cycles import CycleBreakPlan, break_cycles
from .reserve import ReserveSplit, reserve_colors
from .sparsify import sparsify_high_girth

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass
class SolveResult:
    coloring: EdgeColoring
    strategy: str
    split: Optional[ReserveSplit] = None
    sparsified: Optional[ListAssignment] = None
    base_coloring: Optional[EdgeColoring] = None
    cycles: List[MonochromaticCycle] = field(default_factory=list)
    plan: Optional[CycleBreakPlan] = None
    resamples: Dict[str, int] = field(default_factory=dict)


def recolor_and_merge(
    G: Graph,
    phi: EdgeColoring,
    H: EdgeSubset,
    R: ListAssignment,
    Lp: ListAssignment,
    L: Optional[ListAssignment],
    cfg: PipelineConfig,
) -> EdgeColoring:
    """psi = a proper R-coloring on H, phi everywhere else.

    phi must be a degree-2 coloring from the residual lists Lp, H must meet every monochromatic
    cycle of phi, and the reserve and residual palettes must be disjoint at every vertex.
    """
    for v in range(G.vertex_count):
        shared = vertex_list(R, v) & vertex_list(Lp, v)
        if shared:
            raise PreconditionViolation(f"reserve and residual palettes share {sorted(shared)} at vertex {v}")
    if not check_from_lists(G, Lp, phi) or not check_degree_t(G, phi, 2):
        raise PreconditionViolation("phi is not a degree-2 coloring from the residual lists")
    missed = [c for c in monochromatic_cycles(G, phi) if not any(e in H for e in c.edges)]
    if missed:
        raise PreconditionViolation(f"H misses the monochromatic cycle {missed[0].edges} of color {missed[0].color}")

    sub, edge_map = subgraph(H)
    recolored = list_edge_color(sub, restrict(R, sub, edge_map), cfg)
    colors = list(phi.colors)
    for i, e in enumerate(edge_map):
        colors[e] = recolored[i]
    psi = EdgeColoring(G, colors)

    report = check_linear(G, L, psi)
    if not report:
        raise VerificationFailed("merged coloring is not linear:\n" + report.render(G))
    return psi


def _stage(name: str, fn: Callable[[], T]) -> T:
    info = load_yaml("stages.yaml").get(name, {})
    logger.info("stage %s: %s", name, " ".join(str(info.get("description", "")).split()))
    try:
        return fn()
    except VerificationFailed:
        raise
    except LinearArborError as exc:
        logger.warning("stage %s failed: %s", name, exc)
        raise StageFailure(name, exc) from exc


def _direct(G: Graph, L: ListAssignment, cfg: PipelineConfig) -> SolveResult:
    def run() -> EdgeColoring:
        decision = decide_linear_colorable(G, L, cfg.budget)
        if decision.verdict is Verdict.NO:
            raise Infeasible("no linear coloring from these lists exists")
        if decision.verdict is Verdict.BUDGET_EXCEEDED:
            raise BudgetExceeded(decision.nodes, cfg.search_time_limit)
        return decision.witness

    return SolveResult(coloring=_stage("direct", run), strategy="direct")


def _pipeline(G: Graph, L: ListAssignment, cfg: PipelineConfig) -> SolveResult:
    seeds = [int(s) for s in np.random.SeedSequence(cfg.seed).generate_state(5)]
    split = _stage("reserve", lambda: reserve_colors(G, L, cfg.with_seed(seeds[0])))
    R, Lp = split.reserve_lists(), split.residual_lists()
    sparse = _stage("sparsify", lambda: sparsify_high_girth(G, Lp, cfg.with_seed(seeds[1])))
    Lpp = sparse.kept
    phi = _stage("degree_two", lambda: degree_two_coloring(G, Lpp, cfg.with_seed(seeds[2])))
    cycles = monochromatic_cycles(G, phi)
    plan = _stage("break_cycles", lambda: break_cycles(G, R, cycles, cfg.with_seed(seeds[3])))
    psi = _stage("recolor", lambda: recolor_and_merge(G, phi, plan.hitting, R, Lp, L, cfg.with_seed(seeds[4])))
    return SolveResult(
        coloring=psi,
        strategy="pipeline",
        split=split,
        sparsified=Lpp,
        base_coloring=phi,
        cycles=cycles,
        plan=plan,
        resamples={"reserve": split.resamples, "sparsify": sparse.resamples, "break_cycles": plan.resamples},
    )


def solve(G: Graph, L: ListAssignment, cfg: PipelineConfig) -> SolveResult:
    """Linear L-coloring of G by the randomized pipeline or by exhaustive search.

    Stage errors are wrapped in StageFailure naming the stage; a coloring that fails the final
    linear-coloring check raises VerificationFailed.
    """
    strategy = cfg.strategy
    if strategy == "auto":
        strategy = "direct" if G.edge_count <= cfg.exact_cutoff else "pipeline"
    logger.info("solving %r with the %s strategy (seed=%d)", G, strategy, cfg.seed)
    result = _direct(G, L, cfg) if strategy == "direct" else _pipeline(G, L, cfg)

    report = check_linear(G, L, result.coloring)
    if not report:
        raise VerificationFailed("solver output is not a linear coloring:\n" + report.render(G))
    return result
