"""
Proper list edge coloring and the degree-t colorings built on it through copied colors.
"""

import logging
from typing import Dict, List, Optional, Set

import numpy as np

from ..colors import EdgeColoring, ListAssignment, copy_colors, merge_colors
from ..errors import Infeasible, PreconditionViolation, RoundBudgetExhausted, VerificationFailed
from ..exact import Verdict, decide_list_colorable
from ..graph import Graph
from ..verify import check_degree_t, check_from_lists, check_proper, monochromatic_cycles
from .config import PipelineConfig
from .sparsify import color_support_girths

logger = logging.getLogger(__name__)

# probability of a random recolor during min-conflicts repair
NOISE = 0.1


class _Conflicts:
    """Per-vertex color counts of a (possibly improper) assignment."""

    def __init__(self, G: Graph):
        self.G = G
        self.count: List[Dict[int, int]] = [{} for _ in range(G.vertex_count)]

    def add(self, e: int, c: int, k: int = 1) -> None:
        for x in self.G.edges[e]:
            self.count[x][c] = self.count[x].get(c, 0) + k

    def at(self, e: int, c: int) -> int:
        u, v = self.G.edges[e]
        return self.count[u].get(c, 0) + self.count[v].get(c, 0)

    def clashes(self, e: int, c: int) -> bool:
        """True when e, already colored c, shares c with another edge."""
        return self.at(e, c) > 2


def list_edge_color(G: Graph, L: ListAssignment, cfg: PipelineConfig) -> EdgeColoring:
    """Proper L-edge-coloring: randomized greedy, then min-conflicts repair for up to
    cfg.max_rounds steps, then exhaustive search when the graph is small enough.

    Raises Infeasible when an edge has an empty list or the search proves there is no proper
    coloring, RoundBudgetExhausted otherwise.
    """
    m = G.edge_count
    if m == 0:
        return EdgeColoring(G, [], copy_factor=L.copy_factor)
    for e in range(m):
        if not L[e]:
            raise Infeasible(f"edge {e} {G.edges[e]} has an empty list")

    rng = np.random.default_rng(cfg.seed)
    lists = [sorted(l) for l in L.lists]
    table = _Conflicts(G)
    usage: Dict[int, int] = {}
    colors: List[Optional[int]] = [None] * m

    for e in rng.permutation(m).tolist():
        free = [c for c in lists[e] if table.at(e, c) == 0]
        pool = free or lists[e]
        c = min(pool, key=lambda c: (table.at(e, c), usage.get(c, 0), c))
        colors[e] = c
        table.add(e, c)
        usage[c] = usage.get(c, 0) + 1

    bad: Set[int] = {e for e in range(m) if table.clashes(e, colors[e])}
    steps = 0
    while bad and steps < cfg.max_rounds:
        pick = sorted(bad)
        e = pick[int(rng.integers(len(pick)))]
        old = colors[e]
        table.add(e, old, -1)
        if rng.random() < NOISE:
            new = lists[e][int(rng.integers(len(lists[e])))]
        else:
            scores = [table.at(e, c) for c in lists[e]]
            best = min(scores)
            ties = [c for c, s in zip(lists[e], scores) if s == best]
            if len(ties) > 1 and old in ties:
                ties.remove(old)
            new = ties[int(rng.integers(len(ties)))]
        colors[e] = new
        table.add(e, new)
        steps += 1
        for x in G.edges[e]:
            for _, f in G.adjacency[x]:
                if colors[f] in (old, new):
                    if table.clashes(f, colors[f]):
                        bad.add(f)
                    else:
                        bad.discard(f)

    if bad:
        if m > cfg.exhaustive_cutoff:
            raise RoundBudgetExhausted("proper-coloring conflicts", steps)
        logger.debug("repair left %d conflicts on %d edges; falling back to exhaustive search", len(bad), m)
        decision = decide_list_colorable(G, L, t=1, acyclic=False, budget=cfg.budget)
        if decision.verdict is Verdict.NO:
            raise Infeasible("no proper coloring from these lists exists")
        if decision.verdict is Verdict.BUDGET_EXCEEDED:
            raise RoundBudgetExhausted("exhaustive proper-coloring search", steps)
        colors = list(decision.witness.colors)

    phi = EdgeColoring(G, colors, copy_factor=L.copy_factor)
    if not check_proper(G, phi) or not check_from_lists(G, L, phi):
        raise VerificationFailed("list_edge_color produced an improper or off-list coloring")
    logger.debug("proper list coloring of %d edges after %d repair steps", m, steps)
    return phi


def degree_t_coloring(G: Graph, L: ListAssignment, t: int, cfg: PipelineConfig) -> EdgeColoring:
    """Degree-t L-coloring: properly color the t-fold copied lists and merge the copies."""
    phi = list_edge_color(G, copy_colors(L, t), cfg)
    psi = merge_colors(phi, t)
    if not check_degree_t(G, psi, t) or not check_from_lists(G, L, psi):
        raise VerificationFailed(f"merged coloring is not a degree-{t} coloring from the lists")
    return psi


def degree_two_coloring(G: Graph, Lpp: ListAssignment, cfg: PipelineConfig) -> EdgeColoring:
    """Degree-2 coloring from sparsified lists; every monochromatic cycle is at least q_eff long."""
    if cfg.q_eff > 3:
        for c, g in color_support_girths(G, Lpp).items():
            if g < cfg.q_eff:
                raise PreconditionViolation(f"color {c} support has girth {g} < q_eff={cfg.q_eff}")
    psi = degree_t_coloring(G, Lpp, 2, cfg)
    for cycle in monochromatic_cycles(G, psi):
        if len(cycle) < cfg.q_eff:
            raise VerificationFailed(f"monochromatic cycle of length {len(cycle)} < q_eff={cfg.q_eff}")
    return psi
