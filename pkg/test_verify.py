#!/usr/bin/env python3
"""
Tests for the certifying checkers.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete_graph, cycle_graph, graphs, path_graph
from linear_arbor.colors import EdgeColoring, ListAssignment
from linear_arbor.errors import NotDegreeTwo
from linear_arbor.graph import Graph
from linear_arbor.verify import (
    MonochromaticCycle,
    check_degree_t,
    check_from_lists,
    check_linear,
    check_proper,
    cycle_is_monochromatic,
    longest_monochromatic_path,
    monochromatic_cycles,
)


@st.composite
def colored_graphs(draw, max_colors: int = 3):
    g = draw(graphs(max_vertices=8, max_edges=14))
    colors = draw(st.lists(st.integers(1, max_colors), min_size=g.edge_count, max_size=g.edge_count))
    return g, EdgeColoring(g, colors)


def test_check_from_lists_examples():
    g = path_graph(4)
    assert check_from_lists(g, ListAssignment.identical(g, [1, 2]), EdgeColoring(g, [1, 1, 1]))
    report = check_from_lists(g, ListAssignment.identical(g, [1]), EdgeColoring(g, [1, 2, 1]))
    assert not report
    assert [(v.kind, v.edge, v.color) for v in report.violations] == [("not-in-list", 1, 2)]
    empty = ListAssignment(g, [[1], [], [1]])
    assert not check_from_lists(g, empty, EdgeColoring(g, [1, 1, 1]))


def test_uncolored_edges_are_reported():
    g = path_graph(3)
    report = check_proper(g, EdgeColoring(g, [1, None]))
    assert report.violations[0].kind == "uncolored" and report.violations[0].edge == 1


def test_check_proper_examples():
    p3 = path_graph(3)
    report = check_proper(p3, EdgeColoring(p3, [4, 4]))
    assert not report and report.violations[0].vertex == 1 and report.violations[0].kind == "not-proper"
    assert check_proper(p3, EdgeColoring(p3, [4, 5]))
    k4 = complete_graph(4)
    assert check_proper(k4, EdgeColoring(k4, [0, 1, 2, 2, 1, 0]))


@settings(max_examples=100, deadline=None)
@given(colored_graphs())
def test_degree_one_matches_proper(instance):
    g, phi = instance
    assert bool(check_degree_t(g, phi, 1)) == bool(check_proper(g, phi))


def test_check_degree_t_examples():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    report = check_degree_t(star, EdgeColoring(star, [3, 3, 3]), 2)
    assert not report
    assert (report.violations[0].vertex, report.violations[0].color) == (0, 3)
    c4 = cycle_graph(4)
    assert check_degree_t(c4, EdgeColoring(c4, [1, 1, 1, 1]), 2)


def test_check_linear_examples():
    c3 = cycle_graph(3)
    report = check_linear(c3, None, EdgeColoring(c3, [1, 1, 1]))
    assert not report
    assert report.violations[0].kind == "monochromatic-cycle"
    assert sorted(report.violations[0].cycle) == [0, 1, 2]
    assert check_linear(c3, None, EdgeColoring(c3, [1, 1, 2]))
    k4 = complete_graph(4)
    assert check_linear(k4, None, EdgeColoring(k4, [0, 1, 2, 2, 1, 0]))


def test_check_linear_reports_list_violations():
    c3 = cycle_graph(3)
    L = ListAssignment.identical(c3, [1, 2])
    report = check_linear(c3, L, EdgeColoring(c3, [1, 2, 3]))
    assert [v.kind for v in report.violations] == ["not-in-list"]


def test_report_render():
    c3 = cycle_graph(3)
    text = check_linear(c3, None, EdgeColoring(c3, [1, 1, 1])).render(c3)
    assert text.splitlines()[0] == "FAIL"
    assert "monochromatic-cycle" in text and "color=1" in text


@settings(max_examples=300, deadline=None)
@given(colored_graphs())
def test_linear_iff_degree_two_and_acyclic(instance):
    g, phi = instance
    degree_ok = bool(check_degree_t(g, phi, 2))
    linear = bool(check_linear(g, None, phi))
    if degree_ok:
        assert linear == (monochromatic_cycles(g, phi) == [])
    else:
        assert not linear


def test_monochromatic_cycles_examples():
    c6 = cycle_graph(6)
    cycles = monochromatic_cycles(c6, EdgeColoring(c6, [1] * 6))
    assert [len(c) for c in cycles] == [6]
    assert monochromatic_cycles(c6, EdgeColoring(c6, [1, 2, 1, 2, 1, 2])) == []
    two = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    cycles = monochromatic_cycles(two, EdgeColoring(two, [7] * 6))
    assert len(cycles) == 2 and all(c.color == 7 and len(c) == 3 for c in cycles)


def test_monochromatic_cycles_need_degree_two():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(NotDegreeTwo):
        monochromatic_cycles(star, EdgeColoring(star, [1, 1, 1]))


def test_reported_cycles_recheck():
    c5 = cycle_graph(5)
    phi = EdgeColoring(c5, [2] * 5)
    (cycle,) = monochromatic_cycles(c5, phi)
    assert cycle_is_monochromatic(c5, phi, cycle)
    assert not cycle_is_monochromatic(c5, phi, MonochromaticCycle(color=2, edges=[0, 1, 3]))


def test_longest_monochromatic_path():
    p5 = path_graph(5)
    assert longest_monochromatic_path(p5, EdgeColoring(p5, [1, 1, 2, 1])) == 2
    assert longest_monochromatic_path(p5, EdgeColoring(p5, [1, 1, 1, 1])) == 4
    c3 = cycle_graph(3)
    with pytest.raises(NotDegreeTwo):
        longest_monochromatic_path(c3, EdgeColoring(c3, [1, 1, 1]))
