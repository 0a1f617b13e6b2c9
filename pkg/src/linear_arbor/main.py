#!/usr/bin/env python
"""Command-line surface: generators, verifier, solver, exact oracles and experiments."""

import argparse
import io
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Tuple

from pydantic import ValidationError

from .colors import max_color_degree
from .errors import (
    BudgetExceeded,
    FormatError,
    Infeasible,
    LinearArborError,
    RoundBudgetExhausted,
    StageFailure,
)
from .exact import (
    SearchBudget,
    Verdict,
    chromatic_index_t,
    decide_list_colorable,
    list_linear_colorable_all_lists,
    t_arboricity,
)
from .harness import (
    CONCENTRATION_COLUMNS,
    GRAPH_FAMILIES,
    LIST_MODES,
    SUCCESS_COLUMNS,
    THRESHOLD_COLUMNS,
    gen_graph,
    gen_lists,
    run_concentration,
    run_success_rate,
    run_thresholds,
    write_csv,
)
from .pipeline import PipelineConfig, solve
from .settings import Settings, load_yaml
from .tools import (
    format_coloring,
    format_graph,
    format_lists,
    read_coloring,
    read_graph,
    read_lists,
    write_text,
)
from .verify import check_degree_t, check_from_lists, check_linear, check_proper

logger = logging.getLogger("linear_arbor")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out and args.out != "-":
        write_text(args.out, text)
        logger.info("wrote %s", args.out)
    else:
        sys.stdout.write(text)


def _budget(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(node_limit=args.node_limit, time_limit=args.time_limit)


def cmd_gen(args: argparse.Namespace) -> int:
    params = {k: getattr(args, k) for k in ("n", "a", "b", "d", "index", "reject") if getattr(args, k) is not None}
    _emit(args, format_graph(gen_graph(args.family, params, seed=args.seed)))
    return EXIT_OK


def cmd_lists(args: argparse.Namespace) -> int:
    G = read_graph(args.graph)
    palette = args.palette if args.palette is not None else args.k
    _emit(args, format_lists(gen_lists(G, args.k, palette, args.mode, seed=args.seed)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    G = read_graph(args.graph)
    phi = read_coloring(args.coloring, G)
    L = read_lists(args.lists, G) if args.lists else None
    if args.kind == "linear":
        report = check_linear(G, L, phi)
    else:
        report = check_proper(G, phi) if args.kind == "proper" else check_degree_t(G, phi, args.t)
        if L is not None and report:
            report = check_from_lists(G, L, phi)
    _emit(args, report.render(G) + "\n")
    return EXIT_OK if report else EXIT_FAIL


def _solve_inputs(args: argparse.Namespace) -> Tuple[str, str]:
    """Graph and lists paths, given either positionally or through --graph/--lists."""
    paths = []
    for name in ("graph", "lists"):
        given = [p for p in (getattr(args, name), getattr(args, f"{name}_file")) if p is not None]
        if not given:
            raise argparse.ArgumentTypeError(f"solve needs a {name} file")
        if len(set(given)) > 1:
            raise argparse.ArgumentTypeError(f"conflicting {name} files: {given[0]} and {given[1]}")
        paths.append(given[0])
    return paths[0], paths[1]


def cmd_solve(args: argparse.Namespace) -> int:
    graph_path, lists_path = _solve_inputs(args)
    G = read_graph(graph_path)
    L = read_lists(lists_path, G)
    d = args.d if args.d is not None else float(max(2, max_color_degree(G, L)))
    cfg = PipelineConfig.from_defaults(
        d=d,
        epsilon=args.epsilon,
        strategy=args.strategy,
        max_rounds=args.max_rounds,
        seed=args.seed,
        selection=args.selection,
        window_mode=args.window_mode,
        p_reserve=args.p_reserve,
        p_sparsify=args.p_sparsify,
        q_eff=args.q_eff,
        theta_R=args.theta_r,
        theta_Lp=args.theta_lp,
        theta_sp=args.theta_sp,
        theta_cd=args.theta_cd,
        theta_H=args.theta_h,
    )
    try:
        result = solve(G, L, cfg)
    except StageFailure as exc:
        print(f"solve failed in stage {exc.stage}: {exc.cause}", file=sys.stderr)
        return EXIT_FAIL
    logger.info("solved with the %s strategy; resamples %s", result.strategy, result.resamples)
    _emit(args, format_coloring(result.coloring))
    return EXIT_OK


def cmd_exact(args: argparse.Namespace) -> int:
    G = read_graph(args.graph)
    budget = _budget(args)
    try:
        if args.query == "la":
            value = t_arboricity(G, 2, budget)
        elif args.query == "chi-t":
            value = chromatic_index_t(G, args.t, budget)
        elif args.query == "decide":
            if not args.lists:
                raise argparse.ArgumentTypeError("exact decide needs --lists")
            decision = decide_list_colorable(G, read_lists(args.lists, G), args.t, not args.degree_only, budget)
            if decision.verdict is Verdict.BUDGET_EXCEEDED:
                raise BudgetExceeded(decision.nodes, args.time_limit)
            text = decision.verdict.value + "\n"
            if decision.witness is not None:
                text += format_coloring(decision.witness)
            _emit(args, text)
            return EXIT_OK
        else:
            decision = list_linear_colorable_all_lists(G, args.k, budget)
            if decision.verdict is Verdict.BUDGET_EXCEEDED:
                raise BudgetExceeded(decision.nodes, args.time_limit)
            text = decision.verdict.value + "\n"
            if decision.lists is not None:
                text += format_lists(decision.lists)
            _emit(args, text)
            return EXIT_OK
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(args, f"{value}\n")
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace) -> int:
    grid: Dict[str, Any] = load_yaml("experiments.yaml")
    if args.which == "concentration":
        section = grid["concentration"]
        records = run_concentration(
            ell=args.ell or section["ell"],
            p_values=args.p or section["p_values"],
            trials=args.trials or section["trials"],
            seed=args.seed,
            star_degree=section.get("star_degree", 40),
            timing=args.timing,
        )
        columns = CONCENTRATION_COLUMNS
    elif args.which == "success-rate":
        section = grid["success_rate"]
        records = run_success_rate(
            section["cases"], section["configs"], args.trials or section["trials"], seed=args.seed, timing=args.timing
        )
        columns = SUCCESS_COLUMNS
    else:
        section = grid["thresholds"]
        records = run_thresholds(section["log_d_values"], section.get("epsilon", 0.5))
        columns = THRESHOLD_COLUMNS
    buffer = io.StringIO()
    write_csv(records, columns, buffer)
    if args.out is None:
        args.out = os.path.join(Settings().OUTPUT_DIR, f"{args.which}.csv")
    _emit(args, buffer.getvalue())
    return EXIT_OK


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # subcommands must not reset what was given before the subcommand name
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--seed", type=int, default=default(0), help="Seed for every random choice (default 0)")
    parser.add_argument("--out", default=default(None), help="Output path; stdout when omitted or '-'")
    parser.add_argument("--quiet", action="store_true", default=default(False), help="Only log warnings and errors")
    parser.add_argument(
        "--timing", action="store_true", default=default(False), help="Add runtime columns to experiment CSVs"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linear_arbor", description=__doc__)
    _add_global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_command(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help, parents=[common])

    p = add_command("gen", "Generate a graph")
    p.add_argument("family", choices=GRAPH_FAMILIES)
    for name in ("n", "a", "b", "d", "index", "reject"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_gen)

    p = add_command("lists", "Generate a list assignment for a graph file")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--palette", type=int)
    p.add_argument("--mode", choices=LIST_MODES, default="identical")
    p.set_defaults(func=cmd_lists)

    p = add_command("verify", "Check a coloring file")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--lists")
    p.add_argument("--kind", choices=("linear", "proper", "degree-t"), default="linear")
    p.add_argument("--t", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    p = add_command("solve", "Linear list edge coloring")
    p.add_argument("graph", nargs="?")
    p.add_argument("lists", nargs="?")
    p.add_argument("--graph", dest="graph_file", help="Graph file (same as the first positional)")
    p.add_argument("--lists", dest="lists_file", help="Lists file (same as the second positional)")
    p.add_argument("--d", type=float, help="Color-degree parameter (default: max color degree)")
    p.add_argument("--epsilon", type=float)
    p.add_argument("--strategy", choices=("auto", "pipeline", "direct"))
    p.add_argument("--max-rounds", type=int)
    p.add_argument("--selection", choices=("lowest", "random"))
    p.add_argument("--window-mode", choices=("single", "partition"))
    p.add_argument("--p-reserve", type=float)
    p.add_argument("--p-sparsify", type=float)
    p.add_argument("--q-eff", type=int)
    for name in ("theta-r", "theta-lp", "theta-sp", "theta-cd", "theta-h"):
        p.add_argument(f"--{name}", type=float)
    p.set_defaults(func=cmd_solve)

    p = add_command("exact", "Brute-force oracles for small graphs")
    p.add_argument("query", choices=("la", "chi-t", "decide", "lla-all"))
    p.add_argument("graph")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--lists")
    p.add_argument("--degree-only", action="store_true", help="decide: drop the acyclicity requirement")
    p.add_argument("--node-limit", type=int, default=20_000_000)
    p.add_argument("--time-limit", type=float, default=60.0)
    p.set_defaults(func=cmd_exact)

    p = add_command("experiment", "Run an experiment and write a CSV")
    p.add_argument("which", choices=("concentration", "success-rate", "thresholds"))
    p.add_argument("--trials", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--p", type=float, action="append")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    Settings().configure_logging(args.quiet)
    try:
        return args.func(args)
    except (argparse.ArgumentTypeError, ValidationError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, FormatError) as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (Infeasible, BudgetExceeded, RoundBudgetExhausted) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except LinearArborError as exc:
        if isinstance(exc, ValueError):
            print(f"invalid input: {exc}", file=sys.stderr)
            return EXIT_USAGE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
