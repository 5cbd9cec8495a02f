from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np
import pandas as pd

from common import const
from common.errors import ParseError, ValidationError
from common.utils import leading_comment_lines, read_csv, write_csv
from model.wear_state import WearState, bin_index

Matrix = Tuple[Tuple[int, ...], ...]


def _as_matrix(rows) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class RateTable:
    """Banded daily wear increments of both parts.

    a[i][j] is the increment of part 1 and b[i][j] the increment of part 2 when part 1
    sits in band i+1 and part 2 in band j+1. Rows follow part 1, columns part 2.
    """

    a: Matrix
    b: Matrix
    bin_width: int = const.DEFAULT_BIN_WIDTH
    rate_max: int = const.DEFAULT_RATE_MAX

    def __post_init__(self):
        object.__setattr__(self, "a", _as_matrix(self.a))
        object.__setattr__(self, "b", _as_matrix(self.b))
        if self.bin_width < 1:
            raise ValidationError("bin_width must be >= 1, got {}".format(self.bin_width))
        if not self.a or not self.a[0]:
            raise ValidationError("rate matrices must be non-empty")
        m2 = len(self.a[0])
        for name, matrix in (("a", self.a), ("b", self.b)):
            if len(matrix) != len(self.a) or any(len(row) != m2 for row in matrix):
                raise ValidationError("rate matrix {} must be {}x{}".format(name, len(self.a), m2))
            for i, row in enumerate(matrix):
                for j, x in enumerate(row):
                    if not 1 <= x <= self.rate_max:
                        raise ValidationError("rate {}[{}][{}] = {} outside [1, {}]".format(name, i + 1, j + 1, x, self.rate_max))

    @classmethod
    def _trusted(cls, a: Matrix, b: Matrix, bin_width: int, rate_max: int) -> RateTable:
        # skips validation; callers guarantee the invariants (neighbour moves)
        table = object.__new__(cls)
        object.__setattr__(table, "a", a)
        object.__setattr__(table, "b", b)
        object.__setattr__(table, "bin_width", bin_width)
        object.__setattr__(table, "rate_max", rate_max)
        return table

    @classmethod
    def uniform(cls, rate_a: int, rate_b: int = None, m1=const.DEFAULT_BIN_COUNT, m2=const.DEFAULT_BIN_COUNT, bin_width=const.DEFAULT_BIN_WIDTH, rate_max=const.DEFAULT_RATE_MAX):
        rate_b = rate_a if rate_b is None else rate_b
        return cls(((rate_a,) * m2,) * m1, ((rate_b,) * m2,) * m1, bin_width, rate_max)

    @property
    def m1(self) -> int:
        return len(self.a)

    @property
    def m2(self) -> int:
        return len(self.a[0])

    @property
    def shape(self):
        return self.m1, self.m2

    def matrix(self, which: int) -> Matrix:
        return self.a if which == 0 else self.b

    def with_entry(self, which: int, i: int, j: int, value: int) -> RateTable:
        if not 1 <= value <= self.rate_max:
            raise ValidationError("rate {} outside [1, {}]".format(value, self.rate_max))
        rows = list(self.matrix(which))
        row = list(rows[i])
        row[j] = int(value)
        rows[i] = tuple(row)
        if which == 0:
            return RateTable._trusted(tuple(rows), self.b, self.bin_width, self.rate_max)
        return RateTable._trusted(self.a, tuple(rows), self.bin_width, self.rate_max)

    def covers(self, limits) -> bool:
        return self.bin_width * self.m1 >= limits.l1 and self.bin_width * self.m2 >= limits.l2

    def check_covers(self, limits):
        if not self.covers(limits):
            raise ValidationError(
                "bands of width {} ({}x{}) do not reach the limits ({}, {})".format(self.bin_width, self.m1, self.m2, limits.l1, limits.l2)
            )

    def band(self, d: int, part: int) -> int:
        return bin_index(d, self.bin_width, self.m1 if part == 1 else self.m2)

    def rate_lookup(self, state: WearState):
        i = self.band(state.d1, 1) - 1
        j = self.band(state.d2, 2) - 1
        return self.a[i][j], self.b[i][j]

    def to_arrays(self):
        return np.array(self.a, dtype=np.int64), np.array(self.b, dtype=np.int64)

    def band_labels(self, part: int):
        count = self.m1 if part == 1 else self.m2
        return ["{}-{}".format(k * self.bin_width, (k + 1) * self.bin_width - 1) for k in range(count)]


def rate_lookup(state: WearState, table: RateTable):
    return table.rate_lookup(state)


def write_rate_matrix(table: RateTable, which: int, path, header: str = None):
    df = pd.DataFrame(table.matrix(which), index=table.band_labels(1), columns=table.band_labels(2))
    df.index.name = "d1\\d2"
    write_csv(df, path, header=header, index=True)


def read_rate_matrix(path):
    """Returns (rows, bin_width) from a banded CSV; the width is taken from the first column label."""
    try:
        df = read_csv(path, index_col=0, dtype=str)
    except Exception as e:
        raise ParseError(path, 1, "unreadable rate table: {}".format(e))
    first_line = leading_comment_lines(path) + 2
    rows = []
    for offset, (label, row) in enumerate(df.iterrows()):
        try:
            rows.append([int(x) for x in row.values])
        except (TypeError, ValueError):
            raise ParseError(path, first_line + offset, "non-integer rate in band {}".format(label))
    try:
        lo, hi = str(df.columns[0]).split("-")
        bin_width = int(hi) - int(lo) + 1
    except ValueError:
        raise ParseError(path, first_line - 1, "band label {!r} is not of the form lo-hi".format(df.columns[0]))
    return rows, bin_width


def read_rate_table(path_a, path_b, rate_max=const.DEFAULT_RATE_MAX) -> RateTable:
    a, width_a = read_rate_matrix(path_a)
    b, width_b = read_rate_matrix(path_b)
    if width_a != width_b:
        raise ValidationError("band widths differ between {} ({}) and {} ({})".format(path_a, width_a, path_b, width_b))
    return RateTable(a, b, width_a, rate_max)


def write_rate_table(table: RateTable, path_a, path_b, header: str = None):
    write_rate_matrix(table, 0, path_a, header)
    write_rate_matrix(table, 1, path_b, header)
