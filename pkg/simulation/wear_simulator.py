"""Deterministic day-by-day wear under the replace-at-limit regime."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import pandas as pd

from common import const
from common.errors import NonTerminating, ValidationError
from common.log import logger
from common.utils import read_csv, write_csv
from model.cost_model import Limits
from model.failure_history import FailureEvent, FailureHistory, Part
from model.rate_table import RateTable
from model.wear_state import WearState

# (day, d1, d2, event) with wear taken at the end of the day, before any reset
TrajectoryRow = Tuple[int, int, int, str]


@dataclass(frozen=True)
class SimOutcome:
    history: FailureHistory
    trajectory: Optional[Tuple[TrajectoryRow, ...]] = None
    days: int = 0


def step_day(state: WearState, rates: RateTable) -> WearState:
    a, b = rates.rate_lookup(state)
    return WearState(state.d1 + a, state.d2 + b)


def _band_lookup(rates: RateTable, limit: int, count: int):
    # wear below the limit is the only wear a rate is ever read at
    return [min(d // rates.bin_width, count - 1) for d in range(limit)]


def run_limit_policy(rates: RateTable, limits: Limits, max_days: int, targets: Tuple[int, int] = None, record: bool = False):
    """Hot loop shared by the simulator and the objective.

    Returns (times1, times2, events, trajectory, days_run, reached). `targets` stops the run as soon
    as both parts have produced at least that many events.
    """
    a, b = rates.a, rates.b
    l1, l2, fresh = limits.l1, limits.l2, limits.fresh_wear
    bands1 = _band_lookup(rates, l1, rates.m1)
    bands2 = _band_lookup(rates, l2, rates.m2)
    need1, need2 = targets if targets else (None, None)
    times1: List[int] = []
    times2: List[int] = []
    events: List[FailureEvent] = []
    trajectory: List[TrajectoryRow] = [] if record else None
    d1 = d2 = fresh
    day = 0
    while day < max_days:
        if targets is not None and len(times1) >= need1 and len(times2) >= need2:
            break
        day += 1
        i = bands1[d1]
        j = bands2[d2]
        d1 += a[i][j]
        d2 += b[i][j]
        hit1 = d1 >= l1
        hit2 = d2 >= l2
        if record:
            trajectory.append((day, d1, d2, str(Part.of(hit1, hit2)) if hit1 or hit2 else ""))
        if hit1 or hit2:
            events.append(FailureEvent(day, Part.of(hit1, hit2)))
            if hit1:
                times1.append(day)
                d1 = fresh
            if hit2:
                times2.append(day)
                d2 = fresh
    reached = targets is None or (len(times1) >= need1 and len(times2) >= need2)
    return times1, times2, events, trajectory, day, reached


def simulate_limit_policy(
    rates: RateTable,
    limits: Limits,
    max_days: int = None,
    target_counts: Tuple[int, int] = None,
    record_trajectory: bool = False,
    day_cap: int = None,
) -> SimOutcome:
    """Run the replace-at-limit regime from two fresh parts.

    Stop after `max_days`, or once both parts reach `target_counts`. With targets the run is capped
    at `day_cap` days (default: SAFETY_CAP_FACTOR times `max_days` when given, else times the
    larger target scaled by the limits) and NonTerminating is raised if the cap is hit.
    """
    if max_days is None and target_counts is None:
        raise ValidationError("simulation needs max_days or target_counts")
    if max_days is not None and max_days < 0:
        raise ValidationError("max_days must be non-negative, got {}".format(max_days))
    rates.check_covers(limits)
    if target_counts is None:
        _, _, events, trajectory, days, _ = run_limit_policy(rates, limits, max_days, None, record_trajectory)
        return SimOutcome(FailureHistory(tuple(events)), tuple(trajectory) if record_trajectory else None, days)

    if min(target_counts) < 0 or max(target_counts) < 1:
        raise ValidationError("target counts must be positive, got {}".format(target_counts))
    if day_cap is None:
        horizon = max_days if max_days else max(target_counts) * max(limits.l1, limits.l2)
        day_cap = const.SAFETY_CAP_FACTOR * horizon
    _, _, events, trajectory, days, reached = run_limit_policy(rates, limits, day_cap, tuple(target_counts), record_trajectory)
    outcome = SimOutcome(FailureHistory(tuple(events)), tuple(trajectory) if record_trajectory else None, days)
    if not reached:
        logger.debug("[SIM] target counts {} not reached within {} days".format(target_counts, day_cap))
        raise NonTerminating("target counts {} not reached within {} days".format(tuple(target_counts), day_cap), outcome)
    return outcome


def write_trajectory(outcome: SimOutcome, path, header: str = None):
    rows = outcome.trajectory or ()
    df = pd.DataFrame(list(rows), columns=["day", "d1", "d2", "event"])
    write_csv(df, path, header=header)


def read_trajectory(path) -> Tuple[TrajectoryRow, ...]:
    df = read_csv(path, dtype={"day": int, "d1": int, "d2": int, "event": str}, keep_default_na=False)
    return tuple((int(r.day), int(r.d1), int(r.d2), str(r.event)) for r in df.itertuples(index=False))
