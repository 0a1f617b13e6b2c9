"""Instance generators: graph families and list assignments, deterministic per seed."""

import logging
from collections import defaultdict
from typing import Dict, Mapping, Optional, Set, Tuple

import networkx as nx
import numpy as np

from ..colors import ListAssignment
from ..errors import GenerationFailed, InvalidParams
from ..graph import Graph

logger = logging.getLogger(__name__)

GRAPH_FAMILIES = ("complete", "complete-bipartite", "cycle", "path", "random-regular", "atlas")
LIST_MODES = ("identical", "uniform", "adversarial-shared")
MAX_ATTEMPTS = 10_000
ATLAS_SIZE = 1253


def _param(params: Mapping[str, int], name: str, low: int = 0) -> int:
    if name not in params:
        raise InvalidParams(f"missing parameter {name!r}")
    value = int(params[name])
    if value < low:
        raise InvalidParams(f"{name} must be >= {low}, got {value}")
    return value


def _pair_stubs(n: int, d: int, rng: np.random.Generator) -> Optional[Set[Tuple[int, int]]]:
    """One pairing attempt; leftover stubs are re-paired while a simple edge is still possible."""
    edges: Set[Tuple[int, int]] = set()
    stubs = list(range(n)) * d
    while stubs:
        leftover: Dict[int, int] = defaultdict(int)
        rng.shuffle(stubs)
        it = iter(stubs)
        for s1, s2 in zip(it, it):
            if s1 > s2:
                s1, s2 = s2, s1
            if s1 != s2 and (s1, s2) not in edges:
                edges.add((s1, s2))
            else:
                leftover[s1] += 1
                leftover[s2] += 1
        nodes = sorted(leftover)
        if nodes and not any(
            (a, b) not in edges for i, a in enumerate(nodes) for b in nodes[i + 1:]
        ):
            return None
        stubs = [x for x in nodes for _ in range(leftover[x])]
    return edges


def _pair_once(n: int, d: int, rng: np.random.Generator) -> Optional[Set[Tuple[int, int]]]:
    """One uniform perfect matching of the stubs; None on a self-loop or a repeated edge."""
    stubs = list(range(n)) * d
    rng.shuffle(stubs)
    edges: Set[Tuple[int, int]] = set()
    it = iter(stubs)
    for s1, s2 in zip(it, it):
        pair = (min(s1, s2), max(s1, s2))
        if s1 == s2 or pair in edges:
            return None
        edges.add(pair)
    return edges


def random_regular(n: int, d: int, seed: int = 0, reject: bool = False) -> Graph:
    """Simple d-regular graph on n vertices from the stub pairing model.

    With reject=True every pairing that has a loop or a repeated edge is thrown away, which gives
    the uniform distribution over simple d-regular graphs but only succeeds about exp(-(d*d-1)/4)
    of the time. The default keeps the simple pairs of each attempt and re-pairs only the leftover
    stubs; this is fast for every d but is not exactly uniform.
    """
    if (n * d) % 2 or not 0 <= d < n:
        raise InvalidParams(f"random-regular needs n*d even and 0 <= d < n, got n={n} d={d}")
    rng = np.random.default_rng(seed)
    pair = _pair_once if reject else _pair_stubs
    for attempt in range(1, MAX_ATTEMPTS + 1):
        edges = pair(n, d, rng)
        if edges is not None:
            logger.debug("random %d-regular graph on %d vertices after %d attempts", d, n, attempt)
            return Graph(n, sorted(edges))
    raise GenerationFailed(f"no simple {d}-regular graph on {n} vertices after {MAX_ATTEMPTS} attempts")


def gen_graph(family: str, params: Mapping[str, int], seed: int = 0) -> Graph:
    """Graph of a named family. Params: n (complete, cycle, path), a and b (complete-bipartite),
    n and d (random-regular, plus reject=1 for whole-pairing rejection), index (atlas)."""
    if family == "complete":
        n = _param(params, "n")
        return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if family == "complete-bipartite":
        a, b = _param(params, "a"), _param(params, "b")
        return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])
    if family == "cycle":
        n = _param(params, "n", 3)
        return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    if family == "path":
        n = _param(params, "n", 1)
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "random-regular":
        return random_regular(_param(params, "n", 1), _param(params, "d"), seed, reject=bool(params.get("reject", 0)))
    if family == "atlas":
        index = _param(params, "index")
        if index >= ATLAS_SIZE:
            raise InvalidParams(f"atlas index must be < {ATLAS_SIZE}, got {index}")
        return Graph.from_networkx(nx.graph_atlas(index))
    raise InvalidParams(f"unknown graph family {family!r}; expected one of {', '.join(GRAPH_FAMILIES)}")


def gen_lists(G: Graph, k: int, palette: int, mode: str = "identical", seed: int = 0) -> ListAssignment:
    """k-lists over the colors 1..palette.

    `adversarial-shared` draws every list from the same hot set of the first min(palette, k + k//2 + 1)
    colors, so incident edges share colors and color degrees approach the degrees of G.
    """
    if k < 1 or k > palette:
        raise InvalidParams(f"need 1 <= k <= palette, got k={k} palette={palette}")
    if mode == "identical":
        return ListAssignment.identical(G, range(1, k + 1))
    rng = np.random.default_rng(seed)
    if mode == "uniform":
        pool = palette
    elif mode == "adversarial-shared":
        pool = min(palette, k + k // 2 + 1)
    else:
        raise InvalidParams(f"unknown list mode {mode!r}; expected one of {', '.join(LIST_MODES)}")
    return ListAssignment(G, [(rng.choice(pool, size=k, replace=False) + 1).tolist() for _ in range(G.edge_count)])
