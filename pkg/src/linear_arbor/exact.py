"""
Brute-force ground truth for small instances.

One backtracking engine decides whether a graph has an L-coloring in which every color class has
maximum degree at most t and, optionally, is acyclic. Linear colorings are (t=2, acyclic),
degree-t colorings are (t, not acyclic), proper colorings are (t=1). Everything else here (la,
t-arboricity, chi'_t, quantification over all list assignments) is a loop around it.
"""

from __future__ import annotations

import itertools
import logging
import math
import time
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from .colors import EdgeColoring, ListAssignment
from .errors import BudgetExceeded, InvalidParams
from .graph import Graph, max_degree

logger = logging.getLogger(__name__)


class SearchBudget(BaseModel):
    node_limit: int = Field(20_000_000, gt=0, description="Maximum search nodes across one call")
    time_limit: float = Field(60.0, gt=0, description="Wall-clock limit in seconds")


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass
class Decision:
    verdict: Verdict
    witness: Optional[EdgeColoring] = None
    lists: Optional[ListAssignment] = None
    nodes: int = 0

    @property
    def definite(self) -> bool:
        return self.verdict is not Verdict.BUDGET_EXCEEDED


class _Clock:
    """Node and time accounting shared by every search launched under one budget."""

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.started = time.monotonic()

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise BudgetExceeded(self.nodes, self.elapsed)
        if self.nodes & 1023 == 0 and self.elapsed > self.budget.time_limit:
            raise BudgetExceeded(self.nodes, self.elapsed)

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started


class RollbackUnionFind:
    """Union by size without path compression, so every union can be undone in LIFO order."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.history: List[Tuple[int, int]] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.history.append((ry, rx))
        return True

    def rollback(self) -> None:
        ry, rx = self.history.pop()
        self.parent[ry] = ry
        self.size[rx] -= self.size[ry]


class _Search:
    def __init__(self, G: Graph, L: ListAssignment, t: int, acyclic: bool, clock: _Clock):
        self.G, self.t, self.acyclic, self.clock = G, t, acyclic, clock
        self.lists = [sorted(l) for l in L.lists]
        deg = [len(a) for a in G.adjacency]
        self.order = sorted(range(G.edge_count), key=lambda e: (-(deg[G.edges[e][0]] + deg[G.edges[e][1]]), e))
        # identical lists: colors are interchangeable, so only open one new color per level
        self.symmetric = G.edge_count > 0 and all(l == self.lists[0] for l in self.lists)
        self.count: List[Dict[int, int]] = [{} for _ in range(G.vertex_count)]
        self.forests: Dict[int, RollbackUnionFind] = {}
        self.assignment: List[Optional[int]] = [None] * G.edge_count

    def _forest(self, c: int) -> RollbackUnionFind:
        uf = self.forests.get(c)
        if uf is None:
            uf = self.forests[c] = RollbackUnionFind(self.G.vertex_count)
        return uf

    def _allowed(self, e: int, c: int) -> bool:
        u, v = self.G.edges[e]
        if self.count[u].get(c, 0) >= self.t or self.count[v].get(c, 0) >= self.t:
            return False
        if self.acyclic:
            uf = self.forests.get(c)
            if uf is not None and uf.find(u) == uf.find(v):
                return False
        return True

    def _place(self, e: int, c: int) -> bool:
        u, v = self.G.edges[e]
        self.count[u][c] = self.count[u].get(c, 0) + 1
        self.count[v][c] = self.count[v].get(c, 0) + 1
        self.assignment[e] = c
        return self._forest(c).union(u, v) if self.acyclic else False

    def _unplace(self, e: int, c: int, joined: bool) -> None:
        u, v = self.G.edges[e]
        self.count[u][c] -= 1
        self.count[v][c] -= 1
        self.assignment[e] = None
        if joined:
            self.forests[c].rollback()

    def _neighbors_viable(self, e: int) -> bool:
        for x in self.G.edges[e]:
            for _, f in self.G.adjacency[x]:
                if self.assignment[f] is None and not any(self._allowed(f, c) for c in self.lists[f]):
                    return False
        return True

    def run(self) -> Optional[List[int]]:
        if any(not l for l in self.lists):
            return None
        return self._extend(0, 0)

    def _extend(self, depth: int, opened: int) -> Optional[List[int]]:
        if depth == len(self.order):
            return list(self.assignment)  # type: ignore[arg-type]
        self.clock.tick()
        e = self.order[depth]
        candidates = self.lists[e]
        if self.symmetric:
            candidates = candidates[: min(opened + 1, len(candidates))]
        for i, c in enumerate(candidates):
            if not self._allowed(e, c):
                continue
            joined = self._place(e, c)
            if self._neighbors_viable(e):
                found = self._extend(depth + 1, max(opened, i + 1) if self.symmetric else opened)
                if found is not None:
                    return found
            self._unplace(e, c, joined)
        return None


def _decide(G: Graph, L: ListAssignment, t: int, acyclic: bool, clock: _Clock) -> Decision:
    found = _Search(G, L, t, acyclic, clock).run()
    if found is None:
        return Decision(Verdict.NO, nodes=clock.nodes)
    return Decision(Verdict.YES, witness=EdgeColoring(G, found), nodes=clock.nodes)


def decide_list_colorable(
    G: Graph,
    L: ListAssignment,
    t: int = 2,
    acyclic: bool = True,
    budget: Optional[SearchBudget] = None,
) -> Decision:
    """Exhaustive decision: is there an L-coloring whose classes have max degree <= t (and are forests)?"""
    if t < 1:
        raise InvalidParams(f"t must be >= 1, got {t}")
    clock = _Clock(budget or SearchBudget())
    try:
        return _decide(G, L, t, acyclic, clock)
    except BudgetExceeded:
        return Decision(Verdict.BUDGET_EXCEEDED, nodes=clock.nodes)


def decide_linear_colorable(G: Graph, L: ListAssignment, budget: Optional[SearchBudget] = None) -> Decision:
    return decide_list_colorable(G, L, t=2, acyclic=True, budget=budget)


def _least_colors(G: Graph, t: int, acyclic: bool, budget: Optional[SearchBudget]) -> int:
    if G.edge_count == 0:
        return 0
    clock = _Clock(budget or SearchBudget())
    k = max(1, math.ceil(max_degree(G) / t))
    while True:
        decision = _decide(G, ListAssignment.identical(G, range(1, k + 1)), t, acyclic, clock)
        if decision.verdict is Verdict.YES:
            logger.debug("least colors t=%d acyclic=%s: %d (%d nodes)", t, acyclic, k, clock.nodes)
            return k
        k += 1


def t_arboricity(G: Graph, t: int, budget: Optional[SearchBudget] = None) -> int:
    """Least number of forests of max degree <= t covering E(G). Raises BudgetExceeded."""
    if t < 1:
        raise InvalidParams(f"t must be >= 1, got {t}")
    return _least_colors(G, t, True, budget)


def linear_arboricity(G: Graph, budget: Optional[SearchBudget] = None) -> int:
    return t_arboricity(G, 2, budget)


def chromatic_index_t(G: Graph, t: int, budget: Optional[SearchBudget] = None) -> int:
    """Least k admitting a degree-t coloring with k colors; chi'(G) at t=1. Raises BudgetExceeded."""
    if t < 1:
        raise InvalidParams(f"t must be >= 1, got {t}")
    return _least_colors(G, t, False, budget)


def canonical_list_assignments(G: Graph, k: int) -> Iterator[ListAssignment]:
    """Every assignment of k-subsets to E(G), up to renaming colors.

    Colors are introduced in order of first appearance, so labels stay within 1..k*m; only the
    intersection pattern of the lists matters for colorability.
    """
    m = G.edge_count
    lists: List[Tuple[int, ...]] = []

    def extend(e: int, used: int) -> Iterator[ListAssignment]:
        if e == m:
            yield ListAssignment(G, [list(l) for l in lists])
            return
        for fresh in range(0, k + 1):
            for old in itertools.combinations(range(1, used + 1), k - fresh):
                lists.append(old + tuple(range(used + 1, used + fresh + 1)))
                yield from extend(e + 1, used + fresh)
                lists.pop()

    yield from extend(0, 0)


def list_linear_colorable_all_lists(G: Graph, k: int, budget: Optional[SearchBudget] = None) -> Decision:
    """Yes iff every assignment of k-lists admits a linear coloring; No carries a failing assignment."""
    if k < 1:
        raise InvalidParams(f"k must be >= 1, got {k}")
    if G.edge_count > 5:
        logger.warning("quantifying over all %d-lists on %d edges; this grows very quickly", k, G.edge_count)
    clock = _Clock(budget or SearchBudget())
    checked = 0
    try:
        for L in canonical_list_assignments(G, k):
            checked += 1
            if _decide(G, L, 2, True, clock).verdict is Verdict.NO:
                logger.info("found a non-colorable %d-list assignment after %d candidates", k, checked)
                return Decision(Verdict.NO, lists=L, nodes=clock.nodes)
    except BudgetExceeded:
        return Decision(Verdict.BUDGET_EXCEEDED, nodes=clock.nodes)
    logger.info("all %d canonical %d-list assignments are linearly colorable", checked, k)
    return Decision(Verdict.YES, nodes=clock.nodes)
