"""Shared fixtures and hypothesis strategies for the linear_arbor test modules."""

import itertools
import sys
from pathlib import Path

# Add the src directory to the Python path
sys.path.insert(0, str(Path(__file__).parent / "src"))

import pytest
from hypothesis import strategies as st

from linear_arbor.colors import ListAssignment
from linear_arbor.graph import Graph


@st.composite
def graphs(draw, min_vertices: int = 1, max_vertices: int = 7, max_edges: int = 12):
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    if not pairs:
        return Graph(n, [])
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(max_edges, len(pairs))))
    return Graph(n, edges)


@st.composite
def graphs_with_lists(draw, max_vertices: int = 6, max_edges: int = 8, k: int = 2, palette: int = 4):
    G = draw(graphs(max_vertices=max_vertices, max_edges=max_edges))
    colors = list(range(1, palette + 1))
    lists = [
        draw(st.lists(st.sampled_from(colors), min_size=k, max_size=k, unique=True))
        for _ in range(G.edge_count)
    ]
    return G, ListAssignment(G, lists)


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(itertools.combinations(range(n), 2)))


@pytest.fixture
def triangle() -> Graph:
    return cycle_graph(3)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)
