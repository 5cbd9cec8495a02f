from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from common import const
from common.errors import ValidationError
from model.cost_model import Limits
from model.failure_history import FailureHistory
from model.rate_table import RateTable
from simulation.wear_simulator import run_limit_policy


@dataclass(frozen=True)
class ObjectiveValue:
    sse: float
    matched_events: Tuple[int, int]
    penalty_applied: bool
    absolute_sse: float = 0.0  # diagnostic: deviations of absolute event times


class SSEObjective:
    """Sum of squared inter-failure interval deviations against a fixed history.

    The nth simulated event of a part is matched with its nth historical event. Every
    historical event the simulation fails to produce within the day cap costs horizon**2.
    """

    def __init__(self, history: FailureHistory, limits: Limits):
        if len(history) == 0:
            raise ValidationError("objective needs a non-empty history")
        self.history = history
        self.limits = limits
        self.horizon = history.horizon
        self.penalty = float(self.horizon) ** 2
        self.day_cap = const.SAFETY_CAP_FACTOR * self.horizon
        self.times = (history.times(1), history.times(2))
        self.intervals = (history.intervals(1), history.intervals(2))
        self.targets = (len(self.times[0]), len(self.times[1]))

    def __call__(self, rates: RateTable) -> ObjectiveValue:
        times1, times2, _, _, _, reached = run_limit_policy(rates, self.limits, self.day_cap, self.targets)
        sse = 0.0
        absolute = 0.0
        matched = []
        for hist_times, hist_intervals, sim_times in zip(self.times, self.intervals, (times1, times2)):
            n = min(len(hist_times), len(sim_times))
            matched.append(n)
            prev = 0
            for k in range(n):
                eps = (sim_times[k] - prev) - hist_intervals[k]
                sse += eps * eps
                prev = sim_times[k]
                absolute += (sim_times[k] - hist_times[k]) ** 2
            missing = len(hist_times) - n
            sse += missing * self.penalty
            absolute += missing * self.penalty
        return ObjectiveValue(sse, (matched[0], matched[1]), not reached, absolute)

    def value(self, rates: RateTable) -> float:
        return self(rates).sse


def sse_objective(rates: RateTable, limits: Limits, history: FailureHistory) -> ObjectiveValue:
    rates.check_covers(limits)
    return SSEObjective(history, limits)(rates)
