"""
Sparsifying the residual lists so that every color class is locally sparse: each color of L'(e) is
kept independently, and the kept lists must stay long, keep small color degrees, and never share a
color along a cycle shorter than q_eff.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..colors import ListAssignment, color_degrees
from ..errors import VerificationFailed
from ..graph import EdgeSubset, Graph, girth, short_cycles
from ..lll import BadEvent, VariableSpace, resample_until_clear
from .config import PipelineConfig

logger = logging.getLogger(__name__)


def _trials(G: Graph, L: ListAssignment) -> Tuple[Dict[Tuple[int, int], int], List[Tuple[int, int]]]:
    index: Dict[Tuple[int, int], int] = {}
    trials: List[Tuple[int, int]] = []
    for e in range(G.edge_count):
        for c in sorted(L[e]):
            index[(e, c)] = len(trials)
            trials.append((e, c))
    return index, trials


def _kept_lists(G: Graph, trials, assignment: np.ndarray) -> ListAssignment:
    kept: List[set] = [set() for _ in range(G.edge_count)]
    for (e, c), x in zip(trials, assignment.tolist()):
        if x:
            kept[e].add(c)
    return ListAssignment(G, kept)


def sample_sparsify(G: Graph, Lp: ListAssignment, p: float, seed: Optional[int] = None) -> ListAssignment:
    """One independent retention draw per (e, c), no resampling."""
    _, trials = _trials(G, Lp)
    space = VariableSpace.binary([p] * len(trials), seed=seed)
    return _kept_lists(G, trials, space.sample())


def color_support_girths(G: Graph, L: ListAssignment) -> Dict[int, float]:
    """girth(G^L_c) for every color c of the palette."""
    masks: Dict[int, int] = {}
    for e, l in enumerate(L.lists):
        for c in l:
            masks[c] = masks.get(c, 0) | (1 << e)
    return {c: girth(EdgeSubset(G, m)) for c, m in sorted(masks.items())}


@dataclass(frozen=True)
class SparsifiedLists:
    kept: ListAssignment
    resamples: int = 0


def sparsify_events(G: Graph, Lp: ListAssignment, cfg: PipelineConfig) -> Tuple[List[Tuple[int, int]], List[BadEvent]]:
    """The (e, c) retention trials and the A(e), B(v,c), D(C,c) events over them.

    A(e) reads the trials of e, B(v,c) those of (e,c) around v, and D(C,c) those of (f,c)
    along C.
    """
    index, trials = _trials(G, Lp)
    events: List[BadEvent] = []

    for e in range(G.edge_count):
        scope = np.array([index[(e, c)] for c in sorted(Lp[e])], dtype=np.int64)

        def short_list(a, scope=scope, th=cfg.theta_sp):
            return int(a[scope].sum()) < th

        events.append(BadEvent((0, e), short_list, scope, label=f"A[{e}]"))

    # B(v,c) can only hold where d^{L'}(v,c) already exceeds theta_cd
    for v, degrees in enumerate(color_degrees(G, Lp)):
        for c, k in sorted(degrees.items()):
            if k <= cfg.theta_cd:
                continue
            scope = np.array([index[(e, c)] for _, e in G.adjacency[v] if c in Lp[e]], dtype=np.int64)

            def crowded(a, scope=scope, th=cfg.theta_cd):
                return int(a[scope].sum()) > th

            events.append(BadEvent((1, v, c), crowded, scope, label=f"B[{v},{c}]"))

    cycles = short_cycles(G, cfg.q_eff - 1) if cfg.q_eff > 3 else []
    for i, cycle in enumerate(cycles):
        shared = frozenset.intersection(*(Lp[f] for f in cycle))
        for c in sorted(shared):
            scope = np.array([index[(f, c)] for f in cycle], dtype=np.int64)

            def kept_around(a, scope=scope):
                return bool(a[scope].all())

            events.append(BadEvent((2, i, c), kept_around, scope, label=f"D[{i},{c}]"))
    logger.debug("%d sparsify events over %d trials, %d short cycles", len(events), len(trials), len(cycles))
    return trials, events


def sparsify_high_girth(G: Graph, Lp: ListAssignment, cfg: PipelineConfig) -> SparsifiedLists:
    """L''(e) subset of L'(e) with |L''(e)| >= theta_sp, color degrees <= theta_cd, and
    every color support of girth >= q_eff.

    Raises RoundBudgetExhausted when the budget runs out.
    """
    trials, events = sparsify_events(G, Lp, cfg)
    if not trials:
        return SparsifiedLists(ListAssignment(G, [() for _ in range(G.edge_count)]))
    space = VariableSpace.binary([cfg.p_sparsify] * len(trials), seed=cfg.seed)
    logger.debug("sparsifying %d trials (p=%.4f)", len(trials), cfg.p_sparsify)
    outcome = resample_until_clear(space, events, cfg.max_rounds, selection=cfg.selection).raise_for_failure()
    result = _kept_lists(G, trials, outcome.assignment)

    if cfg.q_eff > 3:
        for c, g in color_support_girths(G, result).items():
            if g < cfg.q_eff:
                raise VerificationFailed(f"color {c} support has girth {g} < q_eff={cfg.q_eff}")
    logger.info("sparsified lists found after %d resamples", outcome.resamples)
    return SparsifiedLists(result, outcome.resamples)
