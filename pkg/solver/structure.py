"""Replacement limits of a policy grid and the monotone/threshold structure checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from common.errors import StructureViolation
from solver.bellman import Action, PolicyGrid, ValueFunction

SINGLE = "single"
JOINT = "joint"


@dataclass(frozen=True)
class Thresholds:
    """i_star[d2] is the first d1 where part 1 gets renewed, j_star[d1] the first d2 for part 2.

    The matching tags say whether the switch point is a single or a joint replacement.
    """

    i_star: Tuple[int, ...]
    i_kind: Tuple[str, ...]
    j_star: Tuple[int, ...]
    j_kind: Tuple[str, ...]


def _renew_masks(action: np.ndarray):
    renew1 = (action == Action.REPLACE1) | (action == Action.BOTH)
    renew2 = (action == Action.REPLACE2) | (action == Action.BOTH)
    return renew1, renew2


def _first_break(mask: np.ndarray, axis: int) -> Optional[Tuple[int, int]]:
    """First cell where `mask` switches off again along `axis`, i.e. a cell breaking upward closure."""
    if axis == 0:
        bad = mask[:-1, :] & ~mask[1:, :]
        offset = (1, 0)
    else:
        bad = mask[:, :-1] & ~mask[:, 1:]
        offset = (0, 1)
    hits = np.argwhere(bad)
    if len(hits) == 0:
        return None
    d1, d2 = hits[0]
    return int(d1) + offset[0], int(d2) + offset[1]


def _switch_points(renew: np.ndarray, action: np.ndarray, single: Action):
    # renew is oriented so that axis 0 is the wear of the part being renewed
    stars, kinds = [], []
    for k in range(renew.shape[1]):
        hits = np.flatnonzero(renew[:, k])
        if len(hits) == 0:
            return None, None, k
        stars.append(int(hits[0]))
        kinds.append(SINGLE if action[hits[0], k] == single else JOINT)
    return tuple(stars), tuple(kinds), None


def thresholds(policy: PolicyGrid) -> Thresholds:
    action = np.asarray(policy.action)
    renew1, renew2 = _renew_masks(action)
    broken = _first_break(renew1, 0)
    if broken is not None:
        raise StructureViolation("part-1 replacement region is not a threshold at d1={}, d2={}".format(*broken))
    broken = _first_break(renew2, 1)
    if broken is not None:
        raise StructureViolation("part-2 replacement region is not a threshold at d1={}, d2={}".format(*broken))

    i_star, i_kind, missing = _switch_points(renew1, action, Action.REPLACE1)
    if missing is not None:
        raise StructureViolation("part 1 is never renewed at d2={}".format(missing))
    j_star, j_kind, missing = _switch_points(renew2.T, action.T, Action.REPLACE2)
    if missing is not None:
        raise StructureViolation("part 2 is never renewed at d1={}".format(missing))
    return Thresholds(i_star, i_kind, j_star, j_kind)


@dataclass(frozen=True)
class Violation:
    check: str
    d1: int
    d2: int
    detail: str = ""

    def __str__(self):
        return "{} at ({}, {}){}".format(self.check, self.d1, self.d2, ": " + self.detail if self.detail else "")


@dataclass(frozen=True)
class StructureReport:
    violations: Tuple[Violation, ...]
    notes: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def first(self, check: str = None) -> Optional[Violation]:
        for v in self.violations:
            if check is None or v.check == check:
                return v
        return None

    def to_text(self) -> str:
        lines = ["status={}".format("pass" if self.passed else "fail")]
        for check in CHECKS:
            v = self.first(check)
            lines.append("{}={}".format(check, "ok" if v is None else "fail d1={} d2={}".format(v.d1, v.d2)))
        lines.extend("note={}".format(n) for n in self.notes)
        return "\n".join(lines) + "\n"


MONOTONE_D1 = "monotone_d1"
MONOTONE_D2 = "monotone_d2"
THRESHOLD_PART1 = "threshold_part1"
THRESHOLD_PART2 = "threshold_part2"
BOTH_UPWARD_CLOSED = "both_upward_closed"
CHECKS = [MONOTONE_D1, MONOTONE_D2, THRESHOLD_PART1, THRESHOLD_PART2, BOTH_UPWARD_CLOSED]


def check_structure(vf: ValueFunction, policy: PolicyGrid, tol: float = 0.0, fresh_wear: int = 0) -> StructureReport:
    """Checks the ordering of the value grid and the shape of the replacement regions.

    A value may drop by at most `tol` along either axis. The notes carry a non-failing
    diagnostic: wherever part 2 alone is replaced, proceeding should be optimal at
    (d1, fresh_wear).
    """
    u = np.asarray(vf.u, dtype=float)
    action = np.asarray(policy.action)
    violations = []

    for check, axis in ((MONOTONE_D1, 0), (MONOTONE_D2, 1)):
        drops = np.argwhere(np.diff(u, axis=axis) < -tol)
        if len(drops):
            d1, d2 = (int(x) for x in drops[0])
            d1, d2 = (d1 + 1, d2) if axis == 0 else (d1, d2 + 1)
            prev = u[d1 - 1, d2] if axis == 0 else u[d1, d2 - 1]
            violations.append(Violation(check, d1, d2, "u={:.6g} below {:.6g}".format(u[d1, d2], prev)))

    renew1, renew2 = _renew_masks(action)
    both = action == Action.BOTH
    for check, mask, axes in ((THRESHOLD_PART1, renew1, (0,)), (THRESHOLD_PART2, renew2, (1,)), (BOTH_UPWARD_CLOSED, both, (0, 1))):
        for axis in axes:
            broken = _first_break(mask, axis)
            if broken is not None:
                violations.append(Violation(check, broken[0], broken[1], "action {}".format(Action(int(action[broken])).name)))
                break

    notes = []
    lone2 = np.argwhere(action == Action.REPLACE2)
    odd = [(int(d1), int(d2)) for d1, d2 in lone2 if action[d1, fresh_wear] != Action.PROCEED]
    if odd:
        notes.append("replace2 without proceed at the reset point in {} of {} cells, first at ({}, {})".format(len(odd), len(lone2), *odd[0]))
    return StructureReport(tuple(violations), tuple(notes))


def require_structure(report: StructureReport):
    if not report.passed:
        raise StructureViolation("structure check failed: {}".format(report.first()))
