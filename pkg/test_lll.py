#!/usr/bin/env python3
"""
Tests for the variable space, the resampling loop and the Local Lemma condition checks.
"""

import math

import numpy as np
import pytest

from linear_arbor.colors import ListAssignment
from linear_arbor.errors import DomainError, InvalidParams, RoundBudgetExhausted, WeightOutOfRange
from linear_arbor.graph import Graph
from linear_arbor.lll import (
    BadEvent,
    VariableSpace,
    WeightedEvent,
    check_general_lll,
    check_symmetric_lll,
    lemma_conditions,
    resample_until_clear,
    sample,
)
from linear_arbor.pipeline import PipelineConfig, reserve_events, sparsify_events


def test_sample_degenerate_probabilities():
    assert not sample(VariableSpace.binary([0.0] * 10)).any()
    assert sample(VariableSpace.binary([1.0] * 10)).all()


def test_sample_mean_concentrates():
    n = 100_000
    draws = sample(VariableSpace.binary([0.3] * n), seed=11)
    assert abs(draws.mean() - 0.3) <= 3 * math.sqrt(0.3 * 0.7 / n)


def test_sample_is_reproducible():
    space = VariableSpace.binary([0.5] * 50)
    assert np.array_equal(sample(space, seed=4), sample(space, seed=4))


def test_uniform_space_stays_in_range():
    draws = sample(VariableSpace.uniform([1, 3, 5] * 100), seed=2)
    assert (draws >= 0).all()
    assert (draws < np.array([1, 3, 5] * 100)).all()
    assert (draws[::3] == 0).all()


def test_space_rejects_bad_parameters():
    with pytest.raises(InvalidParams):
        VariableSpace.binary([1.5])
    with pytest.raises(InvalidParams):
        VariableSpace.uniform([0])
    with pytest.raises(InvalidParams):
        VariableSpace()


def test_no_events_succeeds_immediately():
    outcome = resample_until_clear(VariableSpace.binary([0.5] * 3), [], max_rounds=5)
    assert outcome.success and outcome.resamples == 0


def test_event_that_cannot_hold():
    space = VariableSpace.binary([0.0, 0.5])
    event = BadEvent((0,), lambda a: bool(a[0]), [0])
    outcome = resample_until_clear(space, [event], max_rounds=5)
    assert outcome.success and outcome.resamples <= 1


def test_unsatisfiable_event_exhausts_budget():
    space = VariableSpace.binary([0.5])
    event = BadEvent((0,), lambda a: True, [0], label="always")
    outcome = resample_until_clear(space, [event], max_rounds=25)
    assert not outcome.success
    assert outcome.resamples == 25
    assert outcome.violations == {"always": 25}
    with pytest.raises(RoundBudgetExhausted) as info:
        outcome.raise_for_failure()
    assert info.value.label == "always" and info.value.rounds == 25


@pytest.mark.parametrize("selection", ["lowest", "random"])
def test_resampling_clears_local_constraints(selection):
    """Adjacent bits of a ring must not both be 1."""
    n = 40
    space = VariableSpace.binary([0.5] * n, seed=3)
    events = [
        BadEvent((i,), lambda a, i=i: bool(a[i] and a[(i + 1) % n]), [i, (i + 1) % n])
        for i in range(n)
    ]
    outcome = resample_until_clear(space, events, max_rounds=10_000, selection=selection)
    assert outcome.success
    a = outcome.assignment
    assert not any(a[i] and a[(i + 1) % n] for i in range(n))


def test_resampling_replays_from_seed():
    def run():
        space = VariableSpace.binary([0.5] * 20, seed=9)
        events = [BadEvent((i,), lambda a, i=i: bool(a[i] and a[i + 1]), [i, i + 1]) for i in range(19)]
        return resample_until_clear(space, events, max_rounds=1000)

    first, second = run(), run()
    assert first.resamples == second.resamples
    assert np.array_equal(first.assignment, second.assignment)


def test_max_rounds_must_be_positive():
    with pytest.raises(InvalidParams):
        resample_until_clear(VariableSpace.binary([0.5]), [], max_rounds=0)


def test_symmetric_lll_examples():
    assert check_symmetric_lll(0.01, 25)
    assert not check_symmetric_lll(0.01, 26)
    assert check_symmetric_lll(0.0, 10 ** 9)


def test_general_lll_examples():
    assert check_general_lll([WeightedEvent(probability=0.4, weight=0.5)]) == [True]
    assert check_general_lll([WeightedEvent(probability=0.6, weight=0.5)]) == [False]
    pair = [
        WeightedEvent(probability=0.2, weight=0.4, dependencies=[1]),
        WeightedEvent(probability=0.3, weight=0.4, dependencies=[0]),
    ]
    # 0.4 * 0.6 = 0.24
    assert check_general_lll(pair) == [True, False]
    with pytest.raises(WeightOutOfRange):
        check_general_lll([WeightedEvent(probability=0.1, weight=1.0)])


def _by_condition(records):
    return {r.condition: r for r in records}


def test_short_cycle_condition_needs_huge_d():
    """The D(C,c) inequality fails at d = 10^6 for triangles and only holds far out."""
    low = _by_condition(lemma_conditions(1e6, 0.5, q=3, cycle_length=3))["D(C,c) weighted |C|=3"]
    assert not low.holds
    assert low.log_lhs == pytest.approx(3 * (3 * math.log(math.log(1e6)) - math.log(1e6)))
    high = _by_condition(lemma_conditions(math.exp(40), 0.5, q=3, cycle_length=3))["D(C,c) weighted |C|=3"]
    assert high.holds


def test_conditions_at_large_d():
    """At d = e^200 only the residual gap still fails; it needs log^(1/4) d > 8(1+eps)/eps."""
    records = lemma_conditions(math.exp(200), 0.5)
    assert {r.stage for r in records} == {"reserve", "break", "sparsify"}
    assert {r.condition for r in records if not r.holds} == {"residual-threshold-gap"}


def test_conditions_fail_at_desk_scale():
    records = lemma_conditions(64.0, 0.5)
    assert not all(r.holds for r in records)


def test_conditions_domain():
    with pytest.raises(DomainError):
        lemma_conditions(math.e, 0.5)
    with pytest.raises(DomainError):
        lemma_conditions(1e6, 1.0)


def test_resampling_only_rewrites_the_violated_scope():
    probabilities = [0.5] * 20
    both_set = BadEvent(("pair",), lambda a: int(a[0]) + int(a[1]) < 2, [0, 1])
    rounds = 0
    for seed in range(10):
        before = sample(VariableSpace.binary(probabilities), seed=seed)
        outcome = resample_until_clear(VariableSpace.binary(probabilities), [both_set], 1000, seed=seed)
        assert outcome.success and outcome.assignment[0] == 1 and outcome.assignment[1] == 1
        assert np.array_equal(outcome.assignment[2:], before[2:])
        rounds += outcome.resamples
    assert rounds > 0


def _k5_events():
    g = Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    L = ListAssignment.identical(g, [1, 2, 3, 4])
    reserve_cfg = PipelineConfig(d=4.0, p_reserve=0.5, theta_R=1, theta_Lp=2)
    sparsify_cfg = PipelineConfig(d=4.0, p_sparsify=0.5, theta_sp=1, theta_cd=2, q_eff=4)
    yield reserve_events(g, L, reserve_cfg)
    yield sparsify_events(g, L, sparsify_cfg)


@pytest.mark.parametrize("trials, events", list(_k5_events()), ids=["reserve", "sparsify"])
def test_stage_events_ignore_variables_outside_their_scope(trials, events):
    rng = np.random.default_rng(3)
    assert {ev.key[0] for ev in events} >= {0, 1}
    for _ in range(50):
        a = rng.integers(0, 2, len(trials))
        for ev in events:
            outside = np.ones(len(trials), dtype=bool)
            outside[ev.scope] = False
            flipped = a.copy()
            flipped[outside] = 1 - flipped[outside]
            assert ev.holds(a) == ev.holds(flipped), ev.label
