"""
Experiments: concentration of the sampled list statistics against their binomial laws, success
rates of the solver over instance families, and Local Lemma conditions over a grid of d.

Every experiment returns ExperimentRecord rows; `write_csv` renders them under a versioned header
with six significant digits, so a rerun with the same parameters and seed reproduces the file.
"""

import csv
import logging
import math
import time
from collections import Counter
from typing import IO, Any, Dict, Iterable, List, Mapping, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field
from scipy.stats import beta, binom

from ..colors import ListAssignment
from ..errors import StageFailure
from ..graph import Graph
from ..lll import lemma_conditions
from ..pipeline import PipelineConfig, sample_reserve, sample_sparsify, solve
from ..verify import check_linear, longest_monochromatic_path
from .generators import gen_graph, gen_lists

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

CONCENTRATION_COLUMNS = (
    "experiment", "statistic", "n", "p", "q", "seed", "trials", "mean", "expected_mean",
    "variance", "expected_variance", "tail_freq", "binom_tail", "chernoff_bound",
)
SUCCESS_COLUMNS = (
    "experiment", "case", "config", "seed", "trials", "successes", "rate", "ci_low", "ci_high",
    "certified", "mean_reserve_resamples", "mean_sparsify_resamples", "mean_break_resamples", "max_mono_path",
    "top_failure",
)
THRESHOLD_COLUMNS = ("experiment", "log_d", "epsilon", "stage", "condition", "log_lhs", "log_rhs", "holds")


class ExperimentRecord(BaseModel):
    experiment: str = Field(..., description="concentration | success-rate | thresholds")
    params: Dict[str, Any] = Field(default_factory=dict, description="Inputs that regenerate the row")
    seed: int = 0
    stats: Dict[str, Any] = Field(default_factory=dict, description="Measured statistics")
    runtime: Optional[float] = Field(None, description="Seconds; only filled when timing is on")

    def row(self, columns: Sequence[str]) -> Dict[str, Any]:
        values = {"experiment": self.experiment, "seed": self.seed, **self.params, **self.stats}
        out = {c: values.get(c) for c in columns}
        if self.runtime is not None:
            out["runtime"] = self.runtime
        return out


def format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def write_csv(records: Iterable[ExperimentRecord], columns: Sequence[str], stream: IO[str]) -> None:
    records = list(records)
    header = list(columns)
    if any(r.runtime is not None for r in records):
        header.append("runtime")
    name = records[0].experiment if records else ""
    stream.write(f"# schema_version={SCHEMA_VERSION} experiment={name}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for record in records:
        row = record.row(columns)
        writer.writerow([format_value(row.get(c)) for c in header])


def _trial_seeds(seed: int, trials: int) -> List[int]:
    return [int(s) for s in np.random.SeedSequence(seed).generate_state(trials)]


def trial_streams(seed: int, trials: int, streams: int) -> List[List[int]]:
    """Per trial, `streams` seeds drawn from that trial's own child SeedSequence."""
    children = np.random.SeedSequence(seed).spawn(trials)
    return [[int(s) for s in child.generate_state(streams)] for child in children]


def binomial_tail(n: int, q: float, t: float) -> float:
    """Exact P(|X - nq| > t) for X ~ B(n, q)."""
    mu = n * q
    upper = binom.sf(math.floor(mu + t), n, q)
    lower = binom.cdf(math.ceil(mu - t) - 1, n, q) if mu - t > 0 else 0.0
    return float(upper + lower)


def _summarize(statistic: str, samples: np.ndarray, n: int, p: float, q: float, seed: int) -> ExperimentRecord:
    mu = n * q
    t = 3 * math.sqrt(mu)
    tail = float(np.mean(np.abs(samples - mu) > t)) if len(samples) else 0.0
    return ExperimentRecord(
        experiment="concentration",
        params={"statistic": statistic, "n": n, "p": p, "q": q, "trials": len(samples)},
        seed=seed,
        stats={
            "mean": float(np.mean(samples)),
            "expected_mean": mu,
            "variance": float(np.var(samples)),
            "expected_variance": n * q * (1 - q),
            "tail_freq": tail,
            "binom_tail": binomial_tail(n, q, t),
            "chernoff_bound": 2 * math.exp(-3),
        },
    )


def run_concentration(
    ell: int,
    p_values: Sequence[float],
    trials: int,
    seed: int = 0,
    star_degree: int = 40,
    timing: bool = False,
) -> List[ExperimentRecord]:
    """Sample |R(e)| ~ B(ell, p^2), |L'(e)| ~ B(ell, (1-p)^2), |L''(e)| ~ B(ell, p) and the star
    color degree d^{L''}(v, c) ~ B(star_degree, p) through the stage samplers, resampling off."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    edge = Graph(2, [(0, 1)])
    lists = ListAssignment.identical(edge, range(1, ell + 1))
    star = Graph(star_degree + 1, [(0, i) for i in range(1, star_degree + 1)])
    star_lists = ListAssignment.identical(star, [1])
    records: List[ExperimentRecord] = []

    for p in p_values:
        started = time.perf_counter()
        streams = trial_streams(seed, trials, 3)
        reserve = np.empty(trials)
        residual = np.empty(trials)
        kept = np.empty(trials)
        crowd = np.empty(trials)
        for i, (s_reserve, s_kept, s_star) in enumerate(streams):
            split = sample_reserve(edge, lists, p, seed=s_reserve)
            reserve[i] = len(split.reserve_edge(0))
            residual[i] = len(split.residual_edge(0))
            kept[i] = len(sample_sparsify(edge, lists, p, seed=s_kept)[0])
            sparse_star = sample_sparsify(star, star_lists, p, seed=s_star)
            crowd[i] = sum(1 for l in sparse_star.lists if 1 in l)
        batch = [
            _summarize("reserve", reserve, ell, p, p * p, seed),
            _summarize("residual", residual, ell, p, (1 - p) ** 2, seed),
            _summarize("sparsified", kept, ell, p, p, seed),
            _summarize("star-color-degree", crowd, star_degree, p, p, seed),
        ]
        if timing:
            elapsed = time.perf_counter() - started
            for record in batch:
                record.runtime = elapsed
        logger.info("concentration p=%g: mean |R(e)| = %.4f over %d trials", p, batch[0].stats["mean"], trials)
        records.extend(batch)
    return records


def clopper_pearson(k: int, n: int, alpha: float = 0.05) -> List[float]:
    low = beta.ppf(alpha / 2, k, n - k + 1) if k > 0 else 0.0
    high = beta.ppf(1 - alpha / 2, k + 1, n - k) if k < n else 1.0
    return [float(low), float(high)]


def _label(values: Mapping[str, Any]) -> str:
    return ";".join(f"{k}={v}" for k, v in sorted(values.items()))


def run_success_rate(
    cases: Sequence[Mapping[str, Any]],
    configs: Sequence[Mapping[str, Any]],
    trials: int,
    seed: int = 0,
    timing: bool = False,
) -> List[ExperimentRecord]:
    """Solve `trials` seeded instances of every case under every config.

    A case is {family, params, lists: {mode, k, palette}}; a config is a set of PipelineConfig
    overrides. A trial counts as a success only once its coloring passes check_linear here.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    records: List[ExperimentRecord] = []
    seeds = _trial_seeds(seed, trials)
    for case in cases:
        list_params = dict(case.get("lists", {}))
        case_label = f"{case['family']}[{_label(case.get('params', {}))}] {_label(list_params)}"
        for overrides in configs:
            cfg = PipelineConfig.from_defaults(**overrides)
            started = time.perf_counter()
            successes = certified = 0
            reserve_total = sparsify_total = break_total = longest = 0
            failures: Counter = Counter()
            for s in seeds:
                G = gen_graph(case["family"], case.get("params", {}), seed=s)
                L = gen_lists(
                    G, int(list_params.get("k", 1)), int(list_params.get("palette", list_params.get("k", 1))),
                    list_params.get("mode", "identical"), seed=s,
                )
                try:
                    result = solve(G, L, cfg.with_seed(s))
                except StageFailure as exc:
                    failures[f"{exc.stage}:{type(exc.cause).__name__}"] += 1
                    continue
                successes += 1
                if not check_linear(G, L, result.coloring):
                    continue
                certified += 1
                longest = max(longest, longest_monochromatic_path(G, result.coloring))
                reserve_total += result.resamples.get("reserve", 0)
                sparsify_total += result.resamples.get("sparsify", 0)
                break_total += result.resamples.get("break_cycles", 0)
            low, high = clopper_pearson(certified, trials)
            record = ExperimentRecord(
                experiment="success-rate",
                params={"case": case_label, "config": _label(overrides), "trials": trials},
                seed=seed,
                stats={
                    "successes": certified,
                    "rate": certified / trials,
                    "ci_low": low,
                    "ci_high": high,
                    "certified": certified == successes,
                    "mean_reserve_resamples": reserve_total / certified if certified else 0.0,
                    "mean_sparsify_resamples": sparsify_total / certified if certified else 0.0,
                    "mean_break_resamples": break_total / certified if certified else 0.0,
                    "max_mono_path": longest,
                    "top_failure": failures.most_common(1)[0][0] if failures else "",
                },
                runtime=time.perf_counter() - started if timing else None,
            )
            logger.info("success rate %s / %s: %.3f", case_label, _label(overrides), record.stats["rate"])
            records.append(record)
    return records


def run_thresholds(log_d_values: Sequence[float], epsilon: float = 0.5) -> List[ExperimentRecord]:
    """lemma_conditions at d = e^log_d for every value of the grid."""
    records: List[ExperimentRecord] = []
    for log_d in log_d_values:
        for cond in lemma_conditions(math.exp(log_d), epsilon):
            records.append(ExperimentRecord(
                experiment="thresholds",
                params={"log_d": float(log_d), "epsilon": epsilon, "stage": cond.stage, "condition": cond.condition},
                stats={"log_lhs": cond.log_lhs, "log_rhs": cond.log_rhs, "holds": cond.holds},
            ))
    return records
