"""
Text formats for graphs, list assignments and colorings.

Graph file: optional `#` comment lines, then `n m`, then exactly m lines `u v` with 0 <= u < v < n.
List file: one line `u v : c1 c2 ... ck` per edge, colors ascending, edges in any order.
Coloring file: one line `u v c` per colored edge; edges without a line are uncolored.
"""

import os
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

from ..colors import EdgeColoring, ListAssignment
from ..errors import FormatError, LinearArborError
from ..graph import Graph

PathLike = Union[str, Path]


def _data_lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _ints(tokens: List[str], number: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", number)


def _edge_of(G: Graph, u: int, v: int, number: int) -> int:
    if not G.has_edge(u, v):
        raise FormatError(f"({u}, {v}) is not an edge of the graph", number)
    return G.edge_index(u, v)


def parse_graph(text: str) -> Graph:
    lines = list(_data_lines(text))
    if not lines:
        raise FormatError("missing 'n m' header")
    number, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise FormatError("header must be 'n m'", number)
    n, m = _ints(fields, number)
    if n < 0 or m < 0:
        raise FormatError("n and m must be non-negative", number)
    if len(lines) - 1 != m:
        raise FormatError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    for number, line in lines[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise FormatError("edge lines must be 'u v'", number)
        u, v = _ints(fields, number)
        if not 0 <= u < v < n:
            raise FormatError(f"edge ({u}, {v}) must satisfy 0 <= u < v < {n}", number)
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except LinearArborError as exc:
        raise FormatError(str(exc))


def format_graph(G: Graph) -> str:
    return "".join([f"{G.vertex_count} {G.edge_count}\n"] + [f"{u} {v}\n" for u, v in G.edges])


def parse_lists(text: str, G: Graph) -> ListAssignment:
    lists: List[Optional[List[int]]] = [None] * G.edge_count
    for number, line in _data_lines(text):
        head, sep, tail = line.partition(":")
        if not sep:
            raise FormatError("list lines must be 'u v : c1 ... ck'", number)
        ends = head.split()
        if len(ends) != 2:
            raise FormatError("list lines must start with 'u v'", number)
        e = _edge_of(G, *_ints(ends, number), number)
        if lists[e] is not None:
            raise FormatError(f"edge {G.edges[e]} listed twice", number)
        colors = _ints(tail.split(), number)
        if any(c < 0 for c in colors) or len(set(colors)) != len(colors):
            raise FormatError("colors must be distinct non-negative integers", number)
        if colors != sorted(colors):
            raise FormatError("colors must be listed in ascending order", number)
        lists[e] = colors
    missing = [G.edges[e] for e, l in enumerate(lists) if l is None]
    if missing:
        raise FormatError(f"no list for edge {missing[0]}")
    return ListAssignment(G, lists)


def format_lists(L: ListAssignment) -> str:
    out = []
    for (u, v), l in zip(L.graph.edges, L.lists):
        colors = " ".join(str(c) for c in sorted(l))
        out.append(f"{u} {v} : {colors}\n" if colors else f"{u} {v} :\n")
    return "".join(out)


def parse_coloring(text: str, G: Graph) -> EdgeColoring:
    colors: Dict[int, int] = {}
    for number, line in _data_lines(text):
        fields = line.split()
        if len(fields) != 3:
            raise FormatError("coloring lines must be 'u v c'", number)
        u, v, c = _ints(fields, number)
        e = _edge_of(G, u, v, number)
        if e in colors:
            raise FormatError(f"edge ({u}, {v}) colored twice", number)
        if c < 0:
            raise FormatError("colors must be non-negative", number)
        colors[e] = c
    return EdgeColoring(G, [colors.get(e) for e in range(G.edge_count)])


def format_coloring(phi: EdgeColoring) -> str:
    return "".join(f"{u} {v} {c}\n" for (u, v), c in zip(phi.graph.edges, phi.colors) if c is not None)


def read_text(path: PathLike) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def write_text(path: PathLike, text: str) -> None:
    parent = os.path.dirname(os.fspath(path))
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def read_graph(path: PathLike) -> Graph:
    return parse_graph(read_text(path))


def read_lists(path: PathLike, G: Graph) -> ListAssignment:
    return parse_lists(read_text(path), G)


def read_coloring(path: PathLike, G: Graph) -> EdgeColoring:
    return parse_coloring(read_text(path), G)
