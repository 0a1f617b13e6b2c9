"""
Algorithmic Local Lemma: independent variables, predicate bad events over declared scopes, and the
Moser-Tardos loop that resamples the scope of a violated event until no event holds.

Also hosts the symmetric and weighted Local Lemma condition checks and `lemma_conditions`, which
evaluates at a concrete d the inequalities the three randomized stages rely on.
"""

from __future__ import annotations

import heapq
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Literal, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from .errors import DomainError, InvalidParams, RoundBudgetExhausted, VerificationFailed, WeightOutOfRange

logger = logging.getLogger(__name__)

Assignment = np.ndarray


class VariableSpace:
    """Independent variables with a seeded generator.

    Binary variables are true with their own probability p_i; categorical variables are uniform on
    range(arity_i). Every draw goes through one numpy Generator, so runs replay from the seed.
    """

    def __init__(
        self,
        probabilities: Optional[Sequence[float]] = None,
        arities: Optional[Sequence[int]] = None,
        seed: Optional[int] = 0,
    ):
        if (probabilities is None) == (arities is None):
            raise InvalidParams("give exactly one of probabilities or arities")
        self.probabilities = None if probabilities is None else np.asarray(probabilities, dtype=float)
        self.arities = None if arities is None else np.asarray(arities, dtype=np.int64)
        if self.probabilities is not None and np.any((self.probabilities < 0) | (self.probabilities > 1)):
            raise InvalidParams("probabilities must lie in [0, 1]")
        if self.arities is not None and np.any(self.arities < 1):
            raise InvalidParams("arities must be >= 1")
        self.rng = np.random.default_rng(seed)

    @classmethod
    def binary(cls, probabilities: Sequence[float], seed: Optional[int] = 0) -> "VariableSpace":
        return cls(probabilities=probabilities, seed=seed)

    @classmethod
    def uniform(cls, arities: Sequence[int], seed: Optional[int] = 0) -> "VariableSpace":
        return cls(arities=arities, seed=seed)

    def __len__(self) -> int:
        return len(self.probabilities if self.probabilities is not None else self.arities)

    def draw(self, indices: np.ndarray) -> np.ndarray:
        if self.probabilities is not None:
            return (self.rng.random(len(indices)) < self.probabilities[indices]).astype(np.int64)
        return self.rng.integers(0, self.arities[indices])

    def sample(self) -> Assignment:
        return self.draw(np.arange(len(self), dtype=np.int64))


def sample(space: VariableSpace, seed: Optional[int] = None) -> Assignment:
    """One independent draw of every variable; reseeds the space first when `seed` is given."""
    if seed is not None:
        space.rng = np.random.default_rng(seed)
    return space.sample()


@dataclass
class BadEvent:
    key: tuple
    predicate: Callable[[Assignment], bool]
    scope: np.ndarray
    label: str = ""
    weight: Optional[float] = None

    def __post_init__(self):
        self.scope = np.asarray(self.scope, dtype=np.int64)
        if not self.label:
            self.label = "(" + ",".join(str(k) for k in self.key) + ")"

    def holds(self, assignment: Assignment) -> bool:
        return bool(self.predicate(assignment))


@dataclass
class ResampleOutcome:
    success: bool
    assignment: Optional[Assignment]
    resamples: int
    violations: Dict[str, int] = field(default_factory=dict)
    last_violated: Optional[str] = None

    def raise_for_failure(self) -> "ResampleOutcome":
        if not self.success:
            raise RoundBudgetExhausted(self.last_violated, self.resamples)
        return self


def resample_until_clear(
    space: VariableSpace,
    events: Sequence[BadEvent],
    max_rounds: int,
    seed: Optional[int] = None,
    selection: Literal["lowest", "random"] = "lowest",
) -> ResampleOutcome:
    """Moser-Tardos: while an event holds, resample exactly its scope.

    `lowest` picks the violated event with the smallest key; `random` picks uniformly among the
    violated ones using the space's generator. Only events sharing a variable with the resampled
    scope are re-evaluated after each round.
    """
    if max_rounds < 1:
        raise InvalidParams("max_rounds must be >= 1")
    if seed is not None:
        space.rng = np.random.default_rng(seed)
    events = sorted(events, key=lambda ev: ev.key)
    assignment = space.sample()
    readers: Dict[int, List[int]] = {}
    for i, ev in enumerate(events):
        for x in ev.scope.tolist():
            readers.setdefault(x, []).append(i)

    violated = {i for i, ev in enumerate(events) if ev.holds(assignment)}
    heap = list(violated)
    heapq.heapify(heap)
    counts: Dict[str, int] = {}
    rounds = 0
    last: Optional[str] = None

    while violated:
        if rounds >= max_rounds:
            logger.debug("resample budget of %d exhausted with %d events violated", max_rounds, len(violated))
            return ResampleOutcome(False, None, rounds, counts, last)
        if selection == "random":
            pool = sorted(violated)
            i = pool[int(space.rng.integers(len(pool)))]
        else:
            i = heapq.heappop(heap)
            while i not in violated:
                i = heapq.heappop(heap)
        ev = events[i]
        last = ev.label
        counts[ev.label] = counts.get(ev.label, 0) + 1
        assignment[ev.scope] = space.draw(ev.scope)
        rounds += 1
        touched = {j for x in ev.scope.tolist() for j in readers.get(x, ())}
        touched.add(i)
        for j in touched:
            now = events[j].holds(assignment)
            if now and j not in violated:
                violated.add(j)
                heapq.heappush(heap, j)
            elif not now:
                violated.discard(j)
        if selection == "lowest" and i in violated:
            heapq.heappush(heap, i)
        if rounds % 1000 == 0:
            logger.debug("round %d: %d events violated", rounds, len(violated))

    for ev in events:
        if ev.holds(assignment):
            raise VerificationFailed(f"event {ev.label} holds after a clean resample loop")
    return ResampleOutcome(True, assignment, rounds, counts, None)


def check_symmetric_lll(p: float, d: float) -> bool:
    if not 0 <= p <= 1 or d < 0:
        raise InvalidParams("need p in [0, 1] and d >= 0")
    return 4 * p * d <= 1


class WeightedEvent(BaseModel):
    probability: float = Field(..., ge=0, le=1, description="Upper bound on P(A)")
    weight: float = Field(..., description="x_A in [0, 1)")
    dependencies: List[int] = Field(default_factory=list, description="Indices of the events in D_A")


def check_general_lll(events: Sequence[WeightedEvent]) -> List[bool]:
    """Per event: P(A) <= x_A * prod_{B in D_A} (1 - x_B), evaluated in log space."""
    for i, ev in enumerate(events):
        if not 0 <= ev.weight < 1:
            raise WeightOutOfRange(f"event {i} has weight {ev.weight} outside [0, 1)")
    out = []
    for ev in events:
        if ev.probability == 0:
            out.append(True)
            continue
        if ev.weight == 0:
            out.append(False)
            continue
        log_rhs = math.log(ev.weight) + sum(math.log1p(-events[j].weight) for j in ev.dependencies)
        out.append(math.log(ev.probability) <= log_rhs)
    return out


class ConditionRecord(BaseModel):
    stage: str = Field(..., description="reserve | break | sparsify")
    condition: str = Field(..., description="Which inequality")
    log_lhs: float = Field(..., description="Natural log of the left side")
    log_rhs: float = Field(..., description="Natural log of the right side")
    holds: bool


def _scaled_log1m(count_log: float, exponent: float, d_log: float) -> float:
    """count * log(1 - d^-exponent) with count = e^count_log, stable for huge d."""
    x_log = -exponent * d_log
    if x_log < -30:
        return -math.exp(count_log + x_log)
    return math.exp(count_log) * math.log1p(-math.exp(x_log))


def lemma_conditions(d: float, epsilon: float, q: Optional[float] = None, cycle_length: int = 3) -> List[ConditionRecord]:
    """The inequalities each randomized stage needs, evaluated at d (natural logs throughout).

    `q` defaults to q(d) and is the cycle-length bound used by the sparsifying weights;
    `cycle_length` is the |C| at which the D(C,c) inequality is evaluated.
    """
    if d <= math.e:
        raise DomainError(f"conditions need log log d > 0, got d={d}")
    if not 0 < epsilon < 1:
        raise DomainError("epsilon must lie in (0, 1)")
    ld = math.log(d)
    q = ld / (6 * math.log(ld)) if q is None else q
    chernoff = math.log(2) - ld ** 2 / 3
    records: List[ConditionRecord] = []

    # reserving: each of A_e, B_e below 1/(8(d^2(1+eps)+2)) via the Chernoff tail
    records.append(ConditionRecord(
        stage="reserve", condition="chernoff-tail < 1/(8(d^2(1+eps)+2))",
        log_lhs=chernoff, log_rhs=-math.log(8 * (d * d * (1 + epsilon) + 2)),
        holds=chernoff < -math.log(8 * (d * d * (1 + epsilon) + 2)),
    ))
    reserve_floor = d / math.sqrt(ld) * (1 + epsilon)
    deviation = math.sqrt(2 * d * (1 + epsilon) + 4) * ld ** 0.75
    records.append(ConditionRecord(
        stage="reserve", condition="reserve-threshold-gap",
        log_lhs=math.log(deviation), log_rhs=math.log(reserve_floor), holds=deviation < reserve_floor,
    ))
    p = 2 / ld ** 0.25
    ell = math.ceil(d / 2 * (1 + epsilon))
    target = d / 2 * (1 + epsilon / 2)
    low_mean = ell * (1 - p) ** 2 - math.sqrt(ell) * (1 - p) * ld if p < 1 else 0.0
    records.append(ConditionRecord(
        stage="reserve", condition="residual-threshold-gap",
        log_lhs=math.log(target), log_rhs=math.log(low_mean) if low_mean > 0 else -math.inf,
        holds=low_mean > target,
    ))

    # cycle breaking: Talagrand tail 2e^{-log^2 d / 8} below 1/(4(2 q d^2 + 1))
    tal = math.log(2) - ld ** 2 / 8
    bound = -math.log(4 * (2 * q * d * d + 1))
    records.append(ConditionRecord(
        stage="break", condition="talagrand-tail < 1/(4(2qd^2+1))",
        log_lhs=tal, log_rhs=bound, holds=tal < bound,
    ))

    # sparsifying: weighted Local Lemma with x_A = x_B = d^-q and x_D(C) = d^-(|C|-1)
    qi = max(3, math.floor(q))
    lengths = range(3, qi + 1)
    rhs_b = (
        -q * ld
        + _scaled_log1m(math.log(2) + ld, q, ld)
        + sum(_scaled_log1m((r - 1) * ld, r - 1, ld) for r in lengths)
    )
    records.append(ConditionRecord(
        stage="sparsify", condition="B(v,c) weighted", log_lhs=chernoff, log_rhs=rhs_b, holds=chernoff < rhs_b,
    ))
    rhs_a = (
        -q * ld
        + _scaled_log1m(math.log(d * (1 + epsilon) + 2), q, ld)
        + sum(_scaled_log1m(math.log(ell) + (r - 2) * ld, r - 1, ld) for r in lengths)
    )
    records.append(ConditionRecord(
        stage="sparsify", condition="A(e) weighted", log_lhs=chernoff, log_rhs=rhs_a, holds=chernoff < rhs_a,
    ))
    k = cycle_length
    lhs_d = k * (3 * math.log(ld) - ld)
    rhs_d = (
        -(k - 1) * ld
        + _scaled_log1m(math.log(2 * k), q, ld)
        + sum(_scaled_log1m(math.log(k) + (r - 2) * ld, r - 1, ld) for r in lengths)
    )
    records.append(ConditionRecord(
        stage="sparsify", condition=f"D(C,c) weighted |C|={k}", log_lhs=lhs_d, log_rhs=rhs_d, holds=lhs_d < rhs_d,
    ))
    return records
