"""Discounted replacement MDP on the capped wear grid, solved by value iteration.

States are (d1, d2) with d in 0..L; d = L stands for "at or over the limit". Each day the
system either proceeds or replaces part 1, part 2 or both, then wears by one day from the
resulting state. On the part-1 limit row only the replacements that renew part 1 are
admissible, symmetrically on the part-2 limit column, and the corner must renew both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Tuple

import numpy as np

from common import const
from common.errors import IterationCap, ValidationError
from common.log import logger
from model.cost_model import CostModel, Limits
from model.rate_table import RateTable


class Action(IntEnum):
    # value order is the tie-break preference
    PROCEED = 0
    REPLACE1 = 1
    REPLACE2 = 2
    BOTH = 3

    def renews(self, part: int) -> bool:
        return self is Action.BOTH or int(self) == part


@dataclass(frozen=True)
class ValueFunction:
    u: np.ndarray
    residuals: Tuple[float, ...] = field(default=(), compare=False)

    def __eq__(self, other):
        return isinstance(other, ValueFunction) and np.array_equal(self.u, other.u)

    @property
    def shape(self):
        return self.u.shape


@dataclass(frozen=True)
class PolicyGrid:
    action: np.ndarray  # int codes of Action

    def __eq__(self, other):
        return isinstance(other, PolicyGrid) and np.array_equal(self.action, other.action)

    def at(self, d1: int, d2: int) -> Action:
        return Action(int(self.action[d1, d2]))

    @property
    def shape(self):
        return self.action.shape


def default_tol(costs: CostModel) -> float:
    return const.TOL_SCALE * (1 + costs.max_cost)


class Transitions:
    """Successor indices of the capped grid, shared by every sweep."""

    def __init__(self, rates: RateTable, limits: Limits):
        rates.check_covers(limits)
        l1, l2, f = limits.l1, limits.l2, limits.fresh_wear
        d1 = np.arange(l1 + 1)[:, None]
        d2 = np.arange(l2 + 1)[None, :]
        band1 = np.minimum(d1 // rates.bin_width, rates.m1 - 1)
        band2 = np.minimum(d2 // rates.bin_width, rates.m2 - 1)
        a, b = rates.to_arrays()
        self.s1 = np.minimum(d1 + a[band1, band2], l1)
        self.s2 = np.minimum(d2 + b[band1, band2], l2)
        # after renewing part 1 (row f), part 2 (column f), or both (cell f, f)
        self.s1_row, self.s2_row = self.s1[f, :], self.s2[f, :]
        self.s1_col, self.s2_col = self.s1[:, f], self.s2[:, f]
        self.s_both = (int(self.s1[f, f]), int(self.s2[f, f]))
        self.fresh = f
        self.shape = limits.shape
        inadmissible = np.zeros((4,) + self.shape, dtype=bool)
        inadmissible[Action.PROCEED, l1, :] = True
        inadmissible[Action.PROCEED, :, l2] = True
        inadmissible[Action.REPLACE2, l1, :] = True
        inadmissible[Action.REPLACE1, :, l2] = True
        self.inadmissible = inadmissible

    def next_state(self, d1: int, d2: int, action: Action):
        """Successor of (d1, d2) after `action` and one day of wear, on the capped grid."""
        if action.renews(1):
            d1 = self.fresh
        if action.renews(2):
            d2 = self.fresh
        return int(self.s1[d1, d2]), int(self.s2[d1, d2])


def action_costs(u: np.ndarray, trans: Transitions, costs: CostModel) -> np.ndarray:
    """Q-values of the four actions, stacked on axis 0; inadmissible entries are +inf."""
    alpha = costs.alpha
    q = np.empty((4,) + trans.shape)
    q[Action.PROCEED] = alpha * u[trans.s1, trans.s2]
    q[Action.REPLACE1] = (costs.c1 + alpha * u[trans.s1_row, trans.s2_row])[None, :]
    q[Action.REPLACE2] = (costs.c2 + alpha * u[trans.s1_col, trans.s2_col])[:, None]
    q[Action.BOTH] = costs.v + alpha * u[trans.s_both]
    q[trans.inadmissible] = np.inf
    return q


def bellman_backup(vf: ValueFunction, rates: RateTable, costs: CostModel, limits: Limits) -> ValueFunction:
    u = np.asarray(vf.u, dtype=float)
    if u.shape != limits.shape:
        raise ValidationError("value grid shape {} does not match limits {}".format(u.shape, limits.shape))
    if not np.all(np.isfinite(u)) or np.any(u < 0):
        raise ValidationError("value grid must be finite and non-negative")
    return ValueFunction(action_costs(u, Transitions(rates, limits), costs).min(axis=0))


def value_iteration(rates: RateTable, costs: CostModel, limits: Limits, tol: float = None, max_sweeps: int = const.MAX_SWEEPS):
    """Jacobi value iteration from u = 0 until the sup-norm step drops below `tol`.

    Returns (ValueFunction, sweeps); the value function records every sweep's residual.
    """
    tol = default_tol(costs) if tol is None else tol
    if tol <= 0:
        raise ValidationError("tol must be positive, got {}".format(tol))
    trans = Transitions(rates, limits)
    u = np.zeros(limits.shape)
    residuals = []
    for sweep in range(1, max_sweeps + 1):
        nxt = action_costs(u, trans, costs).min(axis=0)
        diff = float(np.max(np.abs(nxt - u)))
        residuals.append(diff)
        u = nxt
        if diff < tol:
            logger.info("[DP] converged in {} sweeps, residual={:.3e}".format(sweep, diff))
            return ValueFunction(u, tuple(residuals)), sweep
        if sweep % 100 == 0:
            logger.debug("[DP] sweep {} residual={:.3e}".format(sweep, diff))
    raise IterationCap("value iteration did not converge within {} sweeps (tol={})".format(max_sweeps, tol))


def extract_policy(vf: ValueFunction, rates: RateTable, costs: CostModel, limits: Limits) -> PolicyGrid:
    q = action_costs(np.asarray(vf.u, dtype=float), Transitions(rates, limits), costs)
    # argmin keeps the first minimum, i.e. the lowest action code
    return PolicyGrid(np.argmin(q, axis=0).astype(np.int8))


def replace_at_limit_policy(limits: Limits) -> PolicyGrid:
    action = np.full(limits.shape, int(Action.PROCEED), dtype=np.int8)
    action[limits.l1, :] = Action.REPLACE1
    action[:, limits.l2] = Action.REPLACE2
    action[limits.l1, limits.l2] = Action.BOTH
    return PolicyGrid(action)


def count_actions(policy: PolicyGrid) -> dict:
    return {a: int(np.count_nonzero(policy.action == a)) for a in Action}
