"""
List assignments, edge colorings, color degree, and the copy/merge transformation that turns a
proper coloring of t-fold copied lists into a degree-t coloring of the original lists.

Colors are non-negative integers. A copied color (c, i) with copy index i in 1..t is encoded as
the single integer c*t + i - 1, so copied colorings serialize like any other coloring; the
assignment remembers its copy factor t.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

from .errors import EmptyGraph, InvalidParams, PartialColoring, VertexOutOfRange
from .graph import EdgeSubset, Graph


class CopiedColor(NamedTuple):
    base: int
    index: int


def encode_copy(base: int, index: int, t: int) -> int:
    if not 1 <= index <= t:
        raise InvalidParams(f"copy index {index} outside 1..{t}")
    return base * t + index - 1


def decode_copy(token: int, t: int) -> CopiedColor:
    return CopiedColor(token // t, token % t + 1)


class ListAssignment:
    """One finite color set per edge of `graph`. `copy_factor` is set on copied assignments."""

    __slots__ = ("graph", "lists", "copy_factor")

    def __init__(self, graph: Graph, lists: Sequence[Iterable[int]], copy_factor: Optional[int] = None):
        if len(lists) != graph.edge_count:
            raise InvalidParams(f"expected {graph.edge_count} lists, got {len(lists)}")
        self.graph = graph
        self.lists: Tuple[FrozenSet[int], ...] = tuple(frozenset(l) for l in lists)
        self.copy_factor = copy_factor

    @classmethod
    def identical(cls, graph: Graph, colors: Iterable[int]) -> "ListAssignment":
        colors = frozenset(colors)
        return cls(graph, [colors] * graph.edge_count)

    def __getitem__(self, e: int) -> FrozenSet[int]:
        return self.lists[e]

    def __len__(self) -> int:
        return len(self.lists)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ListAssignment)
            and self.graph == other.graph
            and self.lists == other.lists
            and self.copy_factor == other.copy_factor
        )

    def __repr__(self) -> str:
        return f"ListAssignment(m={len(self.lists)}, copy_factor={self.copy_factor})"

    def palette(self) -> Set[int]:
        out: Set[int] = set()
        for l in self.lists:
            out |= l
        return out


class EdgeColoring:
    """Per-edge optional color. Total when every edge carries a color."""

    __slots__ = ("graph", "colors", "copy_factor")

    def __init__(self, graph: Graph, colors: Sequence[Optional[int]], copy_factor: Optional[int] = None):
        if len(colors) != graph.edge_count:
            raise InvalidParams(f"expected {graph.edge_count} colors, got {len(colors)}")
        self.graph = graph
        self.colors: Tuple[Optional[int], ...] = tuple(colors)
        self.copy_factor = copy_factor

    def __getitem__(self, e: int) -> Optional[int]:
        return self.colors[e]

    def __len__(self) -> int:
        return len(self.colors)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EdgeColoring) and self.graph == other.graph and self.colors == other.colors

    def __repr__(self) -> str:
        return f"EdgeColoring(m={len(self.colors)}, total={self.is_total()})"

    def is_total(self) -> bool:
        return all(c is not None for c in self.colors)

    def require_total(self) -> None:
        for e, c in enumerate(self.colors):
            if c is None:
                raise PartialColoring(e)

    def color_classes(self) -> Dict[int, EdgeSubset]:
        masks: Dict[int, int] = {}
        for e, c in enumerate(self.colors):
            if c is not None:
                masks[c] = masks.get(c, 0) | (1 << e)
        return {c: EdgeSubset(self.graph, m) for c, m in sorted(masks.items())}


def list_size(L: ListAssignment) -> int:
    if not L.lists:
        raise EmptyGraph("list size is undefined on a graph without edges")
    return min(len(l) for l in L.lists)


def vertex_list(L: ListAssignment, v: int) -> Set[int]:
    out: Set[int] = set()
    for _, e in L.graph.incident(v):
        out |= L.lists[e]
    return out


def color_degree(G: Graph, L: ListAssignment, v: int, c: int) -> int:
    if not 0 <= v < G.vertex_count:
        raise VertexOutOfRange(v, G.vertex_count)
    return sum(1 for _, e in G.adjacency[v] if c in L.lists[e])


def color_degrees(G: Graph, L: ListAssignment) -> List[Dict[int, int]]:
    """Per vertex, the map color -> d_G^L(v, c) over c in L(v)."""
    out: List[Dict[int, int]] = []
    for v in range(G.vertex_count):
        counts: Dict[int, int] = {}
        for _, e in G.adjacency[v]:
            for c in L.lists[e]:
                counts[c] = counts.get(c, 0) + 1
        out.append(counts)
    return out


def max_color_degree(G: Graph, L: ListAssignment) -> int:
    return max((max(d.values(), default=0) for d in color_degrees(G, L)), default=0)


def copy_colors(L: ListAssignment, t: int) -> ListAssignment:
    if t < 1:
        raise InvalidParams(f"copy factor must be >= 1, got {t}")
    if L.copy_factor is not None:
        raise InvalidParams("assignment is already copied")
    return ListAssignment(
        L.graph,
        [[encode_copy(c, i, t) for c in l for i in range(1, t + 1)] for l in L.lists],
        copy_factor=t,
    )


def strip_copies(L: ListAssignment) -> ListAssignment:
    if L.copy_factor is None:
        return L
    t = L.copy_factor
    return ListAssignment(L.graph, [{decode_copy(x, t)[0] for x in l} for l in L.lists])


def merge_colors(phi: EdgeColoring, t: Optional[int] = None) -> EdgeColoring:
    """psi(e) = c where phi(e) = (c, i)."""
    phi.require_total()
    t = t if t is not None else phi.copy_factor
    if t is None:
        raise InvalidParams("coloring carries no copy factor; pass t explicitly")
    return EdgeColoring(phi.graph, [decode_copy(x, t)[0] for x in phi.colors])


def restrict(L: ListAssignment, sub: Graph, edge_map: Sequence[int]) -> ListAssignment:
    """Lists of `L` carried onto `sub`, where sub's edge i is parent edge edge_map[i]."""
    return ListAssignment(sub, [L.lists[e] for e in edge_map], copy_factor=L.copy_factor)
