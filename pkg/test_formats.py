#!/usr/bin/env python3
"""
Tests for the graph, list and coloring text formats.
"""

import pytest

from conftest import complete_graph, cycle_graph
from linear_arbor.colors import EdgeColoring, ListAssignment
from linear_arbor.errors import FormatError
from linear_arbor.graph import Graph
from linear_arbor.tools import (
    format_coloring,
    format_graph,
    format_lists,
    parse_coloring,
    parse_graph,
    parse_lists,
    read_graph,
    write_text,
)


def test_graph_text():
    text = "# a triangle\n3 3\n0 1\n1 2\n0 2\n"
    g = parse_graph(text)
    assert g == cycle_graph(3)
    assert parse_graph(format_graph(g)) == g
    assert format_graph(Graph(2, [])) == "2 0\n"


@pytest.mark.parametrize(
    "text, line",
    [
        ("", None),
        ("3\n", 1),
        ("3 1\n1 0\n", 2),
        ("3 1\n0 3\n", 2),
        ("3 2\n0 1\n", None),
        ("3 1\n0 x\n", 2),
        ("3 2\n0 1\n0 1\n", None),
    ],
)
def test_graph_text_errors(text, line):
    with pytest.raises(FormatError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_lists_text():
    g = cycle_graph(3)
    L = ListAssignment(g, [[2, 1], [3], []])
    text = format_lists(L)
    assert text.splitlines() == ["0 1 : 1 2", "1 2 : 3", "0 2 :"]
    assert parse_lists(text, g) == L
    # edges may come in any order
    assert parse_lists("0 2 :\n1 2 : 3\n0 1 : 1 2\n", g) == L


@pytest.mark.parametrize(
    "text",
    [
        "0 1 : 1\n1 2 : 1\n",
        "0 1 1\n1 2 : 1\n0 2 : 1\n",
        "0 1 : 1\n0 1 : 2\n1 2 : 1\n0 2 : 1\n",
        "0 1 : 1 1\n1 2 : 1\n0 2 : 1\n",
        "0 3 : 1\n1 2 : 1\n0 2 : 1\n",
    ],
)
def test_lists_text_errors(text):
    with pytest.raises(FormatError):
        parse_lists(text, cycle_graph(3))


def test_lists_colors_must_ascend():
    with pytest.raises(FormatError) as info:
        parse_lists("0 1 : 1 2\n1 2 : 3 1\n0 2 : 1\n", cycle_graph(3))
    assert info.value.line == 2
    assert "ascending" in str(info.value)


def test_coloring_text():
    g = complete_graph(4)
    phi = EdgeColoring(g, [0, 1, 2, 2, 1, None])
    text = format_coloring(phi)
    assert len(text.splitlines()) == 5
    assert parse_coloring(text, g) == phi
    assert parse_coloring("", g).colors == (None,) * 6


def test_coloring_text_errors():
    g = cycle_graph(3)
    with pytest.raises(FormatError):
        parse_coloring("0 1\n", g)
    with pytest.raises(FormatError) as info:
        parse_coloring("0 1 1\n1 0 2\n", g)
    assert info.value.line == 2
    with pytest.raises(FormatError):
        parse_coloring("0 1 -1\n", g)


def test_files_round_trip(tmp_path):
    target = tmp_path / "nested" / "k4.txt"
    write_text(target, format_graph(complete_graph(4)))
    assert read_graph(target) == complete_graph(4)
