"""
Simple undirected graphs with stable edge indices, edge-subset views, and the structural
queries the coloring stages need: degrees, girth, short cycles, linear-forest recognition.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

import networkx as nx

from .errors import DegreeExceedsTwo, DuplicateEdge, SelfLoop, VertexOutOfRange

INFINITY = math.inf

Edge = Tuple[int, int]


class Graph:
    """Immutable simple graph. Edge i is `edges[i]`, stored as (u, v) with u < v."""

    __slots__ = ("vertex_count", "edges", "adjacency", "_index")

    def __init__(self, vertex_count: int, edges: Sequence[Edge]):
        adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(vertex_count)]
        index: Dict[Edge, int] = {}
        normalized: List[Edge] = []
        for i, (u, v) in enumerate(edges):
            for x in (u, v):
                if not 0 <= x < vertex_count:
                    raise VertexOutOfRange(x, vertex_count)
            if u == v:
                raise SelfLoop(u)
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise DuplicateEdge(*key)
            index[key] = i
            normalized.append(key)
            adjacency[u].append((v, i))
            adjacency[v].append((u, i))
        self.vertex_count = vertex_count
        self.edges: Tuple[Edge, ...] = tuple(normalized)
        self.adjacency: Tuple[Tuple[Tuple[int, int], ...], ...] = tuple(tuple(a) for a in adjacency)
        self._index = index

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def incident(self, v: int) -> Tuple[Tuple[int, int], ...]:
        """(neighbor, edge index) pairs at v."""
        if not 0 <= v < self.vertex_count:
            raise VertexOutOfRange(v, self.vertex_count)
        return self.adjacency[v]

    def edge_index(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return self._index[key]

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._index

    def full_view(self) -> "EdgeSubset":
        return EdgeSubset(self, (1 << self.edge_count) - 1)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        for i, (u, v) in enumerate(self.edges):
            g.add_edge(u, v, index=i)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        nodes = sorted(g.nodes())
        relabel = {x: i for i, x in enumerate(nodes)}
        return cls(len(nodes), [(relabel[u], relabel[v]) for u, v in g.edges()])


@dataclass(frozen=True)
class EdgeSubset:
    """A set of edges of a parent graph, stored as an integer bitset over edge indices."""

    graph: Graph
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.graph.edge_count:
            raise ValueError("edge subset mask refers to edges outside the parent graph")

    @classmethod
    def from_edges(cls, graph: Graph, edges: Iterable[int]) -> "EdgeSubset":
        mask = 0
        for e in edges:
            mask |= 1 << e
        return cls(graph, mask)

    @classmethod
    def empty(cls, graph: Graph) -> "EdgeSubset":
        return cls(graph, 0)

    def __contains__(self, e: int) -> bool:
        return bool(self.mask >> e & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self) -> Iterator[int]:
        return iter(self.edges())

    def edges(self) -> List[int]:
        out = []
        mask, i = self.mask, 0
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return out

    def union(self, other: "EdgeSubset") -> "EdgeSubset":
        if other.graph is not self.graph and other.graph != self.graph:
            raise ValueError("edge subsets belong to different graphs")
        return EdgeSubset(self.graph, self.mask | other.mask)

    def incident(self, v: int) -> List[Tuple[int, int]]:
        return [(w, e) for w, e in self.graph.incident(v) if self.mask >> e & 1]


GraphLike = Union[Graph, EdgeSubset]


def _as_view(g: GraphLike) -> EdgeSubset:
    return g if isinstance(g, EdgeSubset) else g.full_view()


def build_graph(n: int, pairs: Iterable[Edge]) -> Graph:
    return Graph(n, list(pairs))


def degree(g: GraphLike, v: int) -> int:
    return len(g.incident(v))


def max_degree(g: GraphLike) -> int:
    view = _as_view(g)
    if view.mask == view.graph.full_view().mask:
        return max((len(a) for a in view.graph.adjacency), default=0)
    counts = [0] * view.graph.vertex_count
    for e in view.edges():
        u, v = view.graph.edges[e]
        counts[u] += 1
        counts[v] += 1
    return max(counts, default=0)


def girth(g: GraphLike) -> float:
    """Shortest cycle length of the (sub)graph, or INFINITY when it is acyclic.

    BFS from every vertex: a non-tree edge (x, y) seen from root r closes a closed walk of
    length dist[x] + dist[y] + 1 that contains a cycle at most that long, and the minimum over
    all roots is attained by a root on a shortest cycle.
    """
    view = _as_view(g)
    graph, mask = view.graph, view.mask
    best = INFINITY
    for root in range(graph.vertex_count):
        dist = {root: 0}
        parent_edge = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y, e in graph.adjacency[x]:
                if not mask >> e & 1 or e == parent_edge[x]:
                    continue
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent_edge[y] = e
                    queue.append(y)
                else:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def is_linear_forest(g: GraphLike) -> bool:
    return max_degree(g) <= 2 and girth(g) == INFINITY


def cycles_of_degree2_subgraph(view: GraphLike) -> List[List[int]]:
    """Cycles of a view whose vertices all have degree <= 2, as cyclic edge-index sequences.

    Each cycle starts at its smallest edge index and follows the neighbor edge with the
    smaller index first, so output is deterministic. Path components are skipped.
    """
    view = _as_view(view)
    graph = view.graph
    local = [view.incident(v) for v in range(graph.vertex_count)]
    for v, inc in enumerate(local):
        if len(inc) > 2:
            raise DegreeExceedsTwo(v, len(inc))

    seen = set()
    cycles: List[List[int]] = []
    for start in view.edges():
        if start in seen:
            continue
        # walk the component from `start` in both directions
        component = [start]
        seen.add(start)
        closed = False
        u, v = graph.edges[start]
        prev_edge, at = start, v
        while True:
            nxt = [e for _, e in local[at] if e != prev_edge]
            if not nxt:
                break
            e = nxt[0]
            if e == start:
                closed = True
                break
            seen.add(e)
            component.append(e)
            a, b = graph.edges[e]
            at = b if a == at else a
            prev_edge = e
        if not closed:
            prev_edge, at = start, u
            while True:
                nxt = [e for _, e in local[at] if e != prev_edge]
                if not nxt:
                    break
                e = nxt[0]
                seen.add(e)
                a, b = graph.edges[e]
                at = b if a == at else a
                prev_edge = e
            continue
        cycles.append(_canonical_cycle(component))
    return cycles


def _canonical_cycle(cycle: List[int]) -> List[int]:
    k = cycle.index(min(cycle))
    rotated = cycle[k:] + cycle[:k]
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return rotated


def cycle_vertices(graph: Graph, cycle: Sequence[int]) -> List[int]:
    """Vertex sequence v0, v1, ... of a cyclic edge sequence (edge i joins v_i and v_{i+1})."""
    if len(cycle) == 1:
        return list(graph.edges[cycle[0]])
    a, b = graph.edges[cycle[0]]
    c, d = graph.edges[cycle[1]]
    first = a if b in (c, d) else b
    verts = [first]
    at = first
    for e in cycle:
        x, y = graph.edges[e]
        at = y if x == at else x
        verts.append(at)
    return verts[:-1]


def short_cycles(g: GraphLike, max_length: int) -> List[List[int]]:
    """Every simple cycle with at most `max_length` edges, each reported once as an edge sequence.

    A cycle is grown from its smallest vertex, only through larger vertices, and the two
    orientations are collapsed by requiring the second vertex to be smaller than the last.
    """
    view = _as_view(g)
    graph, mask = view.graph, view.mask
    out: List[List[int]] = []
    if max_length < 3:
        return out
    nbrs = [[(w, e) for w, e in graph.adjacency[v] if mask >> e & 1] for v in range(graph.vertex_count)]

    for root in range(graph.vertex_count):
        path_v = [root]
        path_e: List[int] = []
        on_path = {root}

        def extend(at: int) -> None:
            for w, e in nbrs[at]:
                if w == root and len(path_e) >= 2:
                    if path_v[1] < path_v[-1]:
                        out.append(path_e + [e])
                    continue
                if w <= root or w in on_path or len(path_e) + 1 >= max_length:
                    continue
                path_v.append(w)
                path_e.append(e)
                on_path.add(w)
                extend(w)
                on_path.discard(w)
                path_e.pop()
                path_v.pop()

        extend(root)
    return out


def subgraph(view: EdgeSubset) -> Tuple[Graph, List[int]]:
    """Standalone graph on the view's edges (same vertex set) plus the map new index -> parent index."""
    edge_map = view.edges()
    return Graph(view.graph.vertex_count, [view.graph.edges[e] for e in edge_map]), edge_map
