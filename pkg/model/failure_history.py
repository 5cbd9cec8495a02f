from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Tuple

import pandas as pd

from common.errors import DegenerateHistory, ParseError, ValidationError
from common.utils import leading_comment_lines, read_csv, write_csv


class Part(Enum):
    PART1 = "1"
    PART2 = "2"
    BOTH = "both"

    def __str__(self):
        return self.value

    def involves(self, part: int) -> bool:
        return self is Part.BOTH or self.value == str(part)

    @staticmethod
    def of(hit1: bool, hit2: bool) -> Part:
        if hit1 and hit2:
            return Part.BOTH
        return Part.PART1 if hit1 else Part.PART2


@dataclass(frozen=True)
class FailureEvent:
    time: int
    which: Part


@dataclass(frozen=True)
class FailureHistory:
    events: Tuple[FailureEvent, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        last = 0
        for event in self.events:
            if event.time < 1:
                raise ValidationError("event time must be >= 1, got {}".format(event.time))
            if event.time <= last:
                raise ValidationError("event times must be strictly increasing ({} after {})".format(event.time, last))
            last = event.time

    def __len__(self):
        return len(self.events)

    @property
    def horizon(self) -> int:
        return self.events[-1].time if self.events else 0

    def times(self, part: int) -> List[int]:
        return [e.time for e in self.events if e.which.involves(part)]

    def intervals(self, part: int) -> List[int]:
        """Inter-failure intervals of one part; the first runs from day 0."""
        times = self.times(part)
        return [t - s for s, t in zip([0] + times[:-1], times)]

    @property
    def counts(self) -> Tuple[int, int]:
        return len(self.times(1)), len(self.times(2))

    def require_both_parts(self):
        for part, n in zip((1, 2), self.counts):
            if n == 0:
                raise DegenerateHistory("history has no replacement event for part {}".format(part))


def write_history(history: FailureHistory, path, header: str = None):
    df = pd.DataFrame({"time": [e.time for e in history.events], "part": [str(e.which) for e in history.events]}, columns=["time", "part"])
    write_csv(df, path, header=header)


def read_history(path) -> FailureHistory:
    try:
        df = read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError:
        raise ParseError(path, 1, "missing header time,part")
    if list(df.columns) != ["time", "part"]:
        raise ParseError(path, leading_comment_lines(path) + 1, "expected header time,part, got {}".format(",".join(df.columns)))
    first_line = leading_comment_lines(path) + 2
    events = []
    last = 0
    for offset, (time, part) in enumerate(zip(df["time"], df["part"])):
        line = first_line + offset
        try:
            t = int(time)
        except ValueError:
            raise ParseError(path, line, "time {!r} is not an integer".format(time))
        try:
            which = Part(part.strip().lower().replace("1,2", "both"))
        except ValueError:
            raise ParseError(path, line, "part {!r} must be 1, 2 or both".format(part))
        if t < 1 or t <= last:
            raise ParseError(path, line, "time {} must be >= 1 and after {}".format(t, last))
        last = t
        events.append(FailureEvent(t, which))
    return FailureHistory(tuple(events))
