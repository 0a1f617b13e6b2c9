"""
Breaking the monochromatic cycles of a degree-2 coloring: one edge is chosen uniformly from a
window S(C) of every cycle, and choices are resampled while some vertex v sees more than theta_H
chosen edges whose reserve lists contain a common color c.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Sequence, Tuple

from ..colors import ListAssignment
from ..errors import PreconditionViolation
from ..graph import EdgeSubset, Graph
from ..lll import BadEvent, VariableSpace, resample_until_clear
from ..verify import MonochromaticCycle
from .config import PipelineConfig

logger = logging.getLogger(__name__)


def cycle_windows(cycle: Sequence[int], q: int, mode: str = "single") -> List[List[int]]:
    """Consecutive edge windows of a cycle.

    `single` gives one window of the first min(q, |C|) edges. `partition` splits the cycle into
    max(1, |C| // q) consecutive windows of near-equal size, each at least min(q, |C|) long.
    """
    edges = list(cycle)
    if mode == "single":
        return [edges[: min(q, len(edges))]]
    if mode != "partition":
        raise ValueError(f"unknown window mode {mode!r}")
    k = max(1, len(edges) // q)
    size, extra = divmod(len(edges), k)
    out, at = [], 0
    for i in range(k):
        step = size + (1 if i < extra else 0)
        out.append(edges[at: at + step])
        at += step
    return out


@dataclass
class CycleBreakPlan:
    graph: Graph
    cycles: List[MonochromaticCycle]
    windows: List[List[List[int]]]
    chosen: List[List[int]]
    resamples: int = 0
    hitting: EdgeSubset = field(init=False)

    def __post_init__(self):
        self.hitting = EdgeSubset.from_edges(self.graph, [e for picks in self.chosen for e in picks])

    def hits_every_cycle(self) -> bool:
        return all(any(e in self.hitting for e in cycle.edges) for cycle in self.cycles)

    def max_reserve_degree(self, R: ListAssignment) -> int:
        """max over (v, c) of d_H^R(v, c)."""
        counts: Dict[Tuple[int, int], int] = {}
        for e in self.hitting.edges():
            for x in self.graph.edges[e]:
                for c in R[e]:
                    counts[(x, c)] = counts.get((x, c), 0) + 1
        return max(counts.values(), default=0)


def break_cycles(G: Graph, R: ListAssignment, cycles: Sequence[MonochromaticCycle], cfg: PipelineConfig) -> CycleBreakPlan:
    """Hitting set H with one edge per window and d_H^R(v, c) <= theta_H everywhere.

    Raises PreconditionViolation when the cycles are not pairwise edge-disjoint, and
    RoundBudgetExhausted when the budget runs out.
    """
    cycles = list(cycles)
    owner: Dict[int, int] = {}
    for i, cycle in enumerate(cycles):
        if len(cycle.edges) < 3:
            raise PreconditionViolation(f"cycle {i} has fewer than 3 edges")
        for e in cycle.edges:
            if e in owner:
                raise PreconditionViolation(f"cycles {owner[e]} and {i} share edge {e}")
            owner[e] = i
    if not cycles:
        return CycleBreakPlan(G, [], [], [])

    windows = [cycle_windows(c.edges, cfg.q_eff, cfg.window_mode) for c in cycles]
    flat: List[List[int]] = [w for ws in windows for w in ws]
    space = VariableSpace.uniform([len(w) for w in flat], seed=cfg.seed)

    # (v, c) -> window id -> positions in the window whose edge touches v and reserves c
    touching: Dict[Tuple[int, int], Dict[int, FrozenSet[int]]] = {}
    for w, window in enumerate(flat):
        for pos, e in enumerate(window):
            for x in G.edges[e]:
                for c in R[e]:
                    slots = touching.setdefault((x, c), {})
                    slots[w] = slots.get(w, frozenset()) | {pos}

    events: List[BadEvent] = []
    for (v, c), slots in sorted(touching.items()):
        if len(slots) <= cfg.theta_H:
            continue
        items = sorted(slots.items())

        def crowded(a, items=items, th=cfg.theta_H):
            return sum(1 for w, ok in items if int(a[w]) in ok) > th

        events.append(BadEvent((v, c), crowded, [w for w, _ in items], label=f"A[{v},{c}]"))

    logger.debug("breaking %d cycles over %d windows against %d events", len(cycles), len(flat), len(events))
    outcome = resample_until_clear(space, events, cfg.max_rounds, selection=cfg.selection).raise_for_failure()
    picks = outcome.assignment.tolist()
    chosen, w = [], 0
    for ws in windows:
        chosen.append([window[picks[w + j]] for j, window in enumerate(ws)])
        w += len(ws)
    plan = CycleBreakPlan(G, cycles, windows, chosen, outcome.resamples)
    logger.info("hitting set of %d edges after %d resamples", len(plan.hitting), outcome.resamples)
    return plan
