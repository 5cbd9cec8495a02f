"""Per-day replacement cost of the historical record and of a policy grid run forward."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence

import numpy as np
import pandas as pd

from common.errors import DivisionByZero, ValidationError
from common.utils import read_csv, write_csv
from model.cost_model import CostModel, Limits
from model.failure_history import FailureHistory, Part
from model.rate_table import RateTable
from solver.bellman import Action, PolicyGrid, Transitions

REPLACE1 = "replace1"
REPLACE2 = "replace2"
BOTH = "both"

_PART_KIND = {Part.PART1: REPLACE1, Part.PART2: REPLACE2, Part.BOTH: BOTH}
_ACTION_KIND = {Action.REPLACE1: REPLACE1, Action.REPLACE2: REPLACE2, Action.BOTH: BOTH}


@dataclass(frozen=True)
class CostReport:
    mean_cost_per_day: float
    total_cost: float
    horizon_days: int
    replacements: Dict[str, int] = field(default_factory=dict)


def _price(costs: CostModel, kind: str) -> float:
    return {REPLACE1: costs.c1, REPLACE2: costs.c2, BOTH: costs.v}[kind]


def historical_cost(history: FailureHistory, costs: CostModel) -> CostReport:
    if len(history) == 0:
        raise ValidationError("historical cost needs a non-empty history")
    counts = {REPLACE1: 0, REPLACE2: 0, BOTH: 0}
    for event in history.events:
        counts[_PART_KIND[event.which]] += 1
    total = sum(_price(costs, k) * n for k, n in counts.items())
    return CostReport(total / history.horizon, total, history.horizon, counts)


def _check_admissible(policy: PolicyGrid, trans: Transitions):
    action = np.asarray(policy.action)
    if action.shape != trans.shape:
        raise ValidationError("policy grid shape {} does not match limits {}".format(action.shape, trans.shape))
    picked = np.take_along_axis(trans.inadmissible, action[None, :, :].astype(np.int64), axis=0)[0]
    bad = np.argwhere(picked)
    if len(bad):
        d1, d2 = (int(x) for x in bad[0])
        raise ValidationError("policy proceeds past a limit at ({}, {}) with {}".format(d1, d2, Action(int(action[d1, d2])).name))


def policy_cost(policy: PolicyGrid, rates: RateTable, costs: CostModel, limits: Limits, horizon: int) -> CostReport:
    """Runs the policy from two fresh parts: each day act on the current state, then wear one day."""
    if horizon < 1:
        raise ValidationError("horizon must be >= 1, got {}".format(horizon))
    trans = Transitions(rates, limits)
    _check_admissible(policy, trans)
    counts = {REPLACE1: 0, REPLACE2: 0, BOTH: 0}
    action = np.asarray(policy.action)
    d1 = d2 = limits.fresh_wear
    for _ in range(horizon):
        a = Action(int(action[d1, d2]))
        if a is not Action.PROCEED:
            counts[_ACTION_KIND[a]] += 1
        d1, d2 = trans.next_state(d1, d2, a)
    total = sum(_price(costs, k) * n for k, n in counts.items())
    return CostReport(total / horizon, total, horizon, counts)


def cycle_average_cost(policy: PolicyGrid, rates: RateTable, costs: CostModel, limits: Limits) -> float:
    """Exact long-run cost per day: the deterministic run repeats once a state recurs."""
    trans = Transitions(rates, limits)
    _check_admissible(policy, trans)
    action = np.asarray(policy.action)
    prices = {Action.PROCEED: 0.0, Action.REPLACE1: costs.c1, Action.REPLACE2: costs.c2, Action.BOTH: costs.v}
    seen = {}
    spent = 0.0
    state = (limits.fresh_wear, limits.fresh_wear)
    day = 0
    while state not in seen:
        seen[state] = (day, spent)
        a = Action(int(action[state]))
        spent += prices[a]
        state = trans.next_state(state[0], state[1], a)
        day += 1
    start_day, start_spent = seen[state]
    return (spent - start_spent) / (day - start_day)


def compare(optimal: CostReport, historical: CostReport) -> float:
    """Percent reduction of the mean daily cost relative to the historical record."""
    if historical.mean_cost_per_day == 0:
        raise DivisionByZero("historical mean cost is zero, reduction is undefined")
    return 100.0 * (historical.mean_cost_per_day - optimal.mean_cost_per_day) / historical.mean_cost_per_day


@dataclass(frozen=True)
class ScenarioComparison:
    scenario: str
    historical_mean: float
    policy_mean: float
    reduction_pct: float


COMPARISON_COLUMNS = ["scenario", "historical_mean", "policy_mean", "reduction_pct"]


def write_comparison(rows: Sequence[ScenarioComparison], path, header: str = None):
    df = pd.DataFrame([(r.scenario, r.historical_mean, r.policy_mean, r.reduction_pct) for r in rows], columns=COMPARISON_COLUMNS)
    write_csv(df, path, header=header)


def read_comparison(path) -> List[ScenarioComparison]:
    df = read_csv(path, dtype={"scenario": str})
    return [ScenarioComparison(str(r.scenario), float(r.historical_mean), float(r.policy_mean), float(r.reduction_pct)) for r in df.itertuples(index=False)]
