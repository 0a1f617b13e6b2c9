"""
Reserve colors: every vertex keeps a random reserve set R(v) of its colors. An edge uv may be
recolored later from R(e) = L(e) & R(u) & R(v) and is colored first from L'(e) = L(e) - R(u) - R(v);
the two palettes never meet at a vertex.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from ..colors import ListAssignment, list_size, vertex_list
from ..errors import PreconditionViolation
from ..graph import Graph
from ..lll import BadEvent, VariableSpace, resample_until_clear
from .config import PipelineConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReserveSplit:
    graph: Graph
    lists: ListAssignment
    reserve: Tuple[FrozenSet[int], ...]
    resamples: int = 0

    def reserve_edge(self, e: int) -> FrozenSet[int]:
        u, v = self.graph.edges[e]
        return self.lists[e] & self.reserve[u] & self.reserve[v]

    def residual_edge(self, e: int) -> FrozenSet[int]:
        u, v = self.graph.edges[e]
        return self.lists[e] - self.reserve[u] - self.reserve[v]

    def reserve_lists(self) -> ListAssignment:
        return ListAssignment(self.graph, [self.reserve_edge(e) for e in range(self.graph.edge_count)])

    def residual_lists(self) -> ListAssignment:
        return ListAssignment(self.graph, [self.residual_edge(e) for e in range(self.graph.edge_count)])

    def disjointness_violations(self) -> List[str]:
        """Empty when R(e), L'(e) are disjoint subsets of L(e) and R(v), L'(v) are disjoint."""
        out = []
        residual = self.residual_lists()
        for e in range(self.graph.edge_count):
            r, lp = self.reserve_edge(e), self.residual_edge(e)
            if not r <= self.lists[e] or not lp <= self.lists[e]:
                out.append(f"edge {e}: reserve or residual list escapes L(e)")
            if r & lp:
                out.append(f"edge {e}: R(e) and L'(e) share {sorted(r & lp)}")
        for v in range(self.graph.vertex_count):
            shared = self.reserve[v] & vertex_list(residual, v)
            if shared:
                out.append(f"vertex {v}: R(v) and L'(v) share {sorted(shared)}")
        return out


def _reserve_variables(G: Graph, L: ListAssignment) -> Tuple[List[Dict[int, int]], List[Tuple[int, int]]]:
    index: List[Dict[int, int]] = []
    trials: List[Tuple[int, int]] = []
    for v in range(G.vertex_count):
        slots = {}
        for c in sorted(vertex_list(L, v)):
            slots[c] = len(trials)
            trials.append((v, c))
        index.append(slots)
    return index, trials


def _split_from(G: Graph, L: ListAssignment, trials, assignment: np.ndarray, resamples: int) -> ReserveSplit:
    reserve: List[set] = [set() for _ in range(G.vertex_count)]
    for (v, c), kept in zip(trials, assignment.tolist()):
        if kept:
            reserve[v].add(c)
    return ReserveSplit(G, L, tuple(frozenset(r) for r in reserve), resamples)


def sample_reserve(G: Graph, L: ListAssignment, p: float, seed: Optional[int] = None) -> ReserveSplit:
    """One independent draw of every (v, c) reserve trial, no resampling."""
    _, trials = _reserve_variables(G, L)
    space = VariableSpace.binary([p] * len(trials), seed=seed)
    return _split_from(G, L, trials, space.sample(), 0)


def reserve_events(G: Graph, L: ListAssignment, cfg: PipelineConfig) -> Tuple[List[Tuple[int, int]], List[BadEvent]]:
    """The (v, c) reserve trials and the A_e, B_e events over them.

    A_e and B_e both read every (v, c) trial at the two endpoints of e.
    """
    index, trials = _reserve_variables(G, L)
    events: List[BadEvent] = []
    for e, (u, v) in enumerate(G.edges):
        colors = sorted(L[e])
        at_u = np.array([index[u][c] for c in colors], dtype=np.int64)
        at_v = np.array([index[v][c] for c in colors], dtype=np.int64)
        scope = np.array(sorted(set(index[u].values()) | set(index[v].values())), dtype=np.int64)

        def short_reserve(a, at_u=at_u, at_v=at_v, th=cfg.theta_R):
            return int(np.sum(a[at_u] & a[at_v])) < th

        def short_residual(a, at_u=at_u, at_v=at_v, th=cfg.theta_Lp):
            return int(np.sum((1 - a[at_u]) & (1 - a[at_v]))) < th

        events.append(BadEvent((0, e), short_reserve, scope, label=f"A_e[{e}]"))
        events.append(BadEvent((1, e), short_residual, scope, label=f"B_e[{e}]"))
    return trials, events


def reserve_colors(G: Graph, L: ListAssignment, cfg: PipelineConfig) -> ReserveSplit:
    """Reserve sets with |R(e)| >= theta_R and |L'(e)| >= theta_Lp on every edge.

    Raises RoundBudgetExhausted when the budget runs out.
    """
    if G.edge_count == 0:
        return ReserveSplit(G, L, tuple(frozenset() for _ in range(G.vertex_count)))
    if list_size(L) < 1:
        raise PreconditionViolation("reserve_colors needs every list to be non-empty")

    trials, events = reserve_events(G, L, cfg)
    space = VariableSpace.binary([cfg.p_reserve] * len(trials), seed=cfg.seed)
    logger.debug("reserving over %d trials with %d events (p=%.4f)", len(trials), len(events), cfg.p_reserve)
    outcome = resample_until_clear(space, events, cfg.max_rounds, selection=cfg.selection).raise_for_failure()
    split = _split_from(G, L, trials, outcome.assignment, outcome.resamples)
    logger.info("reserve split found after %d resamples", outcome.resamples)
    return split
