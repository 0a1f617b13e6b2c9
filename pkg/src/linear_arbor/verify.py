"""
Certifying checkers for every coloring notion used here. Each check returns a VerifyReport that
names a concrete witness for every violation; none of them mutates its inputs.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from .colors import EdgeColoring, ListAssignment
from .errors import DegreeExceedsTwo, NotDegreeTwo
from .graph import INFINITY, Graph, cycle_vertices, cycles_of_degree2_subgraph, girth, max_degree


class Violation(BaseModel):
    kind: str = Field(..., description="not-in-list | not-proper | degree-exceeded | monochromatic-cycle | uncolored")
    edge: Optional[int] = Field(None, description="Offending edge index")
    vertex: Optional[int] = Field(None, description="Offending vertex")
    color: Optional[int] = Field(None, description="Offending color")
    cycle: Optional[List[int]] = Field(None, description="Cycle witness as an edge-index sequence")

    def render(self, graph: Optional[Graph] = None) -> str:
        parts = [self.kind]
        if self.edge is not None:
            where = f" {graph.edges[self.edge]}" if graph is not None else ""
            parts.append(f"edge={self.edge}{where}")
        if self.vertex is not None:
            parts.append(f"vertex={self.vertex}")
        if self.color is not None:
            parts.append(f"color={self.color}")
        if self.cycle is not None:
            parts.append("cycle=" + ",".join(str(e) for e in self.cycle))
        return " ".join(parts)


class VerifyReport(BaseModel):
    passed: bool = Field(..., description="Verdict")
    violations: List[Violation] = Field(default_factory=list, description="One entry per witness")

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def __bool__(self) -> bool:
        return self.passed

    def render(self, graph: Optional[Graph] = None) -> str:
        return "\n".join([self.verdict] + [v.render(graph) for v in self.violations])


class MonochromaticCycle(BaseModel):
    color: int
    edges: List[int]

    def __len__(self) -> int:
        return len(self.edges)


def _report(violations: List[Violation]) -> VerifyReport:
    return VerifyReport(passed=not violations, violations=violations)


def _uncolored(phi: EdgeColoring) -> List[Violation]:
    return [Violation(kind="uncolored", edge=e) for e, c in enumerate(phi.colors) if c is None]


def _class_degrees(G: Graph, phi: EdgeColoring) -> Dict[Tuple[int, int], int]:
    counts: Dict[Tuple[int, int], int] = {}
    for e, c in enumerate(phi.colors):
        if c is None:
            continue
        u, v = G.edges[e]
        counts[(u, c)] = counts.get((u, c), 0) + 1
        counts[(v, c)] = counts.get((v, c), 0) + 1
    return counts


def check_from_lists(G: Graph, L: ListAssignment, phi: EdgeColoring) -> VerifyReport:
    violations = _uncolored(phi)
    for e, c in enumerate(phi.colors):
        if c is not None and c not in L.lists[e]:
            violations.append(Violation(kind="not-in-list", edge=e, color=c))
    return _report(violations)


def check_degree_t(G: Graph, phi: EdgeColoring, t: int) -> VerifyReport:
    violations = _uncolored(phi)
    kind = "not-proper" if t == 1 else "degree-exceeded"
    for (v, c), k in sorted(_class_degrees(G, phi).items()):
        if k > t:
            violations.append(Violation(kind=kind, vertex=v, color=c))
    return _report(violations)


def check_proper(G: Graph, phi: EdgeColoring) -> VerifyReport:
    return check_degree_t(G, phi, 1)


def monochromatic_cycles(G: Graph, phi: EdgeColoring) -> List[MonochromaticCycle]:
    """Cycles inside single color classes of a degree-2 coloring; pairwise edge-disjoint."""
    out: List[MonochromaticCycle] = []
    for c, view in phi.color_classes().items():
        try:
            cycles = cycles_of_degree2_subgraph(view)
        except DegreeExceedsTwo as exc:
            raise NotDegreeTwo(f"color {c} has degree {exc.degree} at vertex {exc.v}") from exc
        out.extend(MonochromaticCycle(color=c, edges=cyc) for cyc in cycles)
    return out


def check_linear(G: Graph, L: Optional[ListAssignment], phi: EdgeColoring) -> VerifyReport:
    report = check_degree_t(G, phi, 2)
    violations = list(report.violations)
    if L is not None:
        violations += [v for v in check_from_lists(G, L, phi).violations if v.kind != "uncolored"]
    if report.passed:
        violations += [
            Violation(kind="monochromatic-cycle", color=cyc.color, cycle=cyc.edges)
            for cyc in monochromatic_cycles(G, phi)
        ]
    else:
        # degree > 2 somewhere; cycles can still be witnessed per class where degrees are fine
        for c, view in phi.color_classes().items():
            try:
                cycles = cycles_of_degree2_subgraph(view)
            except DegreeExceedsTwo:
                continue
            violations += [Violation(kind="monochromatic-cycle", color=c, cycle=cyc) for cyc in cycles]
    return _report(violations)


def longest_monochromatic_path(G: Graph, phi: EdgeColoring) -> int:
    """Edges in the longest single-color path of a linear coloring."""
    best = 0
    for c, view in phi.color_classes().items():
        if max_degree(view) > 2 or girth(view) != INFINITY:
            raise NotDegreeTwo(f"color {c} is not a linear forest")
        seen = set()
        for start in view.edges():
            if start in seen:
                continue
            stack, size = [start], 0
            seen.add(start)
            while stack:
                e = stack.pop()
                size += 1
                for x in G.edges[e]:
                    for _, f in view.incident(x):
                        if f not in seen:
                            seen.add(f)
                            stack.append(f)
            best = max(best, size)
    return best


def cycle_is_monochromatic(G: Graph, phi: EdgeColoring, cycle: MonochromaticCycle) -> bool:
    """Independent re-check of a reported cycle: closed, simple, and one color."""
    if len(cycle.edges) < 3 or any(phi.colors[e] != cycle.color for e in cycle.edges):
        return False
    verts = cycle_vertices(G, cycle.edges)
    if len(set(verts)) != len(verts):
        return False
    return all(
        G.has_edge(verts[i], verts[(i + 1) % len(verts)]) and
        G.edge_index(verts[i], verts[(i + 1) % len(verts)]) == cycle.edges[i]
        for i in range(len(verts))
    )
