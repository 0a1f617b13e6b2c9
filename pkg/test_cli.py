#!/usr/bin/env python3
"""
End-to-end tests of the command-line entry point.
"""

import pytest

from linear_arbor.main import EXIT_FAIL, EXIT_IO, EXIT_OK, EXIT_USAGE, main
from linear_arbor.tools import read_coloring, read_graph, read_lists
from linear_arbor.verify import check_linear


@pytest.fixture
def triangle_files(tmp_path):
    graph = tmp_path / "c3.txt"
    graph.write_text("3 3\n0 1\n1 2\n0 2\n")
    two = tmp_path / "two.txt"
    two.write_text("0 1 : 1 2\n1 2 : 1 2\n0 2 : 1 2\n")
    one = tmp_path / "one.txt"
    one.write_text("0 1 : 1\n1 2 : 1\n0 2 : 1\n")
    return graph, two, one


def test_gen_writes_graph(tmp_path):
    out = tmp_path / "k4.txt"
    assert main(["--out", str(out), "gen", "complete", "--n", "4"]) == EXIT_OK
    assert read_graph(out).edge_count == 6


def test_gen_to_stdout(capsys):
    assert main(["--quiet", "gen", "path", "--n", "3"]) == EXIT_OK
    assert capsys.readouterr().out == "3 2\n0 1\n1 2\n"


def test_gen_bad_params_is_usage_error():
    assert main(["--quiet", "gen", "random-regular", "--n", "5", "--d", "3"]) == EXIT_USAGE


def test_lists_round_trip(tmp_path, triangle_files):
    graph, _, _ = triangle_files
    out = tmp_path / "lists.txt"
    assert main(["--quiet", "--out", str(out), "lists", str(graph), "--k", "2", "--palette", "4", "--mode", "uniform"]) == EXIT_OK
    L = read_lists(out, read_graph(graph))
    assert all(len(l) == 2 for l in L.lists)


def test_solve_then_verify(tmp_path, triangle_files):
    graph, two, _ = triangle_files
    out = tmp_path / "phi.txt"
    assert main(["--quiet", "--out", str(out), "solve", str(graph), str(two)]) == EXIT_OK
    G = read_graph(graph)
    assert check_linear(G, read_lists(two, G), read_coloring(out, G))
    assert main(["--quiet", "verify", str(graph), str(out), "--lists", str(two)]) == EXIT_OK


def test_solve_accepts_named_inputs_and_trailing_globals(tmp_path, triangle_files):
    graph, two, _ = triangle_files
    out = tmp_path / "phi.txt"
    args = ["--quiet", "solve", "--graph", str(graph), "--lists", str(two), "--strategy", "direct",
            "--seed", "3", "--out", str(out)]
    assert main(args) == EXIT_OK
    G = read_graph(graph)
    assert check_linear(G, read_lists(two, G), read_coloring(out, G))


def test_solve_input_errors_are_usage_errors(triangle_files):
    graph, two, one = triangle_files
    assert main(["--quiet", "solve", "--graph", str(graph)]) == EXIT_USAGE
    assert main(["--quiet", "solve", str(graph), str(two), "--lists", str(one)]) == EXIT_USAGE


def test_global_flags_after_the_subcommand(tmp_path):
    before, after = tmp_path / "before.txt", tmp_path / "after.txt"
    cubic = ["gen", "random-regular", "--n", "10", "--d", "3"]
    assert main(["--quiet", "--seed", "2", "--out", str(before)] + cubic) == EXIT_OK
    assert main(cubic + ["--seed", "2", "--out", str(after), "--quiet"]) == EXIT_OK
    assert before.read_text() == after.read_text()
    # a flag given only before the subcommand survives the subcommand parser
    kept = tmp_path / "kept.txt"
    assert main(["--out", str(kept), "--seed", "2"] + cubic) == EXIT_OK
    assert kept.read_text() == before.read_text()


def test_solve_infeasible_exits_one(capsys, triangle_files):
    graph, _, one = triangle_files
    assert main(["--quiet", "solve", str(graph), str(one)]) == EXIT_FAIL
    assert "stage direct" in capsys.readouterr().err


def test_solve_bad_epsilon_is_usage_error(triangle_files):
    graph, two, _ = triangle_files
    assert main(["--quiet", "solve", str(graph), str(two), "--epsilon", "2"]) == EXIT_USAGE


def test_verify_reports_cycle(tmp_path, capsys, triangle_files):
    graph, _, _ = triangle_files
    phi = tmp_path / "mono.txt"
    phi.write_text("0 1 1\n1 2 1\n0 2 1\n")
    assert main(["--quiet", "verify", str(graph), str(phi)]) == EXIT_FAIL
    out = capsys.readouterr().out
    assert out.startswith("FAIL") and "monochromatic-cycle" in out
    assert main(["--quiet", "verify", str(graph), str(phi), "--kind", "degree-t", "--t", "2"]) == EXIT_OK
    assert main(["--quiet", "verify", str(graph), str(phi), "--kind", "proper"]) == EXIT_FAIL


def test_missing_file_is_io_error(tmp_path):
    assert main(["--quiet", "verify", str(tmp_path / "nope.txt"), str(tmp_path / "phi.txt")]) == EXIT_IO


def test_malformed_graph_is_io_error(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n2 1\n")
    assert main(["--quiet", "lists", str(bad), "--k", "1"]) == EXIT_IO


def test_exact_queries(capsys, triangle_files):
    graph, two, one = triangle_files
    assert main(["--quiet", "exact", "la", str(graph)]) == EXIT_OK
    assert capsys.readouterr().out == "2\n"
    assert main(["--quiet", "exact", "chi-t", str(graph), "--t", "1"]) == EXIT_OK
    assert capsys.readouterr().out == "3\n"
    assert main(["--quiet", "exact", "decide", str(graph), "--lists", str(one)]) == EXIT_OK
    assert capsys.readouterr().out == "no\n"
    assert main(["--quiet", "exact", "decide", str(graph), "--lists", str(one), "--degree-only"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "yes"
    assert main(["--quiet", "exact", "lla-all", str(graph), "--k", "1"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "no"


def test_exact_decide_needs_lists(triangle_files):
    graph, _, _ = triangle_files
    assert main(["--quiet", "exact", "decide", str(graph)]) == EXIT_USAGE


def test_exact_budget_exits_one(tmp_path):
    k6 = tmp_path / "k6.txt"
    assert main(["--quiet", "--out", str(k6), "gen", "complete", "--n", "6"]) == EXIT_OK
    assert main(["--quiet", "exact", "la", str(k6), "--node-limit", "2"]) == EXIT_FAIL


def test_experiment_thresholds_csv(tmp_path):
    out = tmp_path / "thresholds.csv"
    assert main(["--quiet", "--out", str(out), "experiment", "thresholds"]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "# schema_version=1 experiment=thresholds"
    assert "runtime" not in lines[1]


def test_experiment_concentration_timing(tmp_path):
    out = tmp_path / "conc.csv"
    args = ["--quiet", "--timing", "--out", str(out), "experiment", "concentration", "--trials", "20", "--ell", "30", "--p", "0.2"]
    assert main(args) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[1].endswith(",runtime")
    assert len(lines) == 2 + 4


CUBIC_FLAGS = [
    "--strategy", "pipeline", "--d", "3", "--p-reserve", "0.45", "--theta-r", "1", "--theta-lp", "3",
    "--p-sparsify", "1", "--theta-sp", "1", "--theta-cd", "100", "--theta-h", "1",
]


def test_solve_output_is_reproducible(tmp_path):
    graph, lists = tmp_path / "g.txt", tmp_path / "l.txt"
    gen = ["--quiet", "gen", "random-regular", "--n", "32", "--d", "3", "--seed", "1", "--out", str(graph)]
    assert main(gen) == EXIT_OK
    assert main(["--quiet", "lists", str(graph), "--k", "20", "--seed", "1", "--out", str(lists)]) == EXIT_OK
    outputs = []
    for name in ("first.txt", "second.txt"):
        out = tmp_path / name
        args = ["--quiet", "solve", "--graph", str(graph), "--lists", str(lists), "--seed", "7", "--out", str(out)]
        assert main(args + CUBIC_FLAGS) == EXIT_OK
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    G = read_graph(graph)
    assert check_linear(G, read_lists(lists, G), read_coloring(tmp_path / "first.txt", G))


@pytest.mark.slow
def test_success_rate_csv_is_reproducible(tmp_path):
    outputs = []
    for name in ("first.csv", "second.csv"):
        out = tmp_path / name
        args = ["--quiet", "experiment", "success-rate", "--trials", "2", "--seed", "5", "--out", str(out)]
        assert main(args) == EXIT_OK
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    lines = outputs[0].decode().splitlines()
    assert lines[0] == "# schema_version=1 experiment=success-rate"
    assert "mean_sparsify_resamples" in lines[1].split(",")
