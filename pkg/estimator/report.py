from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
import pandas as pd

from common.utils import read_csv, write_csv
from estimator.annealer import SARun, TraceRow
from estimator.restarts import GridCell
from model.rate_table import RateTable

TRACE_COLUMNS = ["iter", "temp", "objective", "proposed", "accepted"]


def write_trace(run: SARun, path, header: str = None):
    rows = [(r.iteration, r.temperature, r.objective, r.proposed, int(r.accepted)) for r in run.trace]
    write_csv(pd.DataFrame(rows, columns=TRACE_COLUMNS), path, header=header)


def read_trace(path) -> Tuple[TraceRow, ...]:
    df = read_csv(path)
    return tuple(TraceRow(int(r.iter), float(r.temp), float(r.objective), float(r.proposed), bool(r.accepted)) for r in df.itertuples(index=False))


def write_summary(cells: Sequence[GridCell], path, header: str = None):
    """One row per (n, cool) cell: starting temperature, each run's best objective, their average."""
    width = max((len(c.results) for c in cells), default=0)
    columns = ["n", "t0", "cool"] + ["run{}".format(k + 1) for k in range(width)] + ["average"]
    rows = []
    for c in cells:
        padded = list(c.results) + [None] * (width - len(c.results))
        rows.append([c.iters_per_temp, c.t0, c.cool] + padded + [c.average])
    write_csv(pd.DataFrame(rows, columns=columns), path, header=header)


def read_summary(path) -> List[GridCell]:
    df = read_csv(path)
    run_columns = [c for c in df.columns if c.startswith("run")]
    cells = []
    for _, r in df.iterrows():
        results = tuple(float(r[c]) for c in run_columns if not pd.isna(r[c]))
        cells.append(GridCell(int(r["n"]), float(r["cool"]), float(r["t0"]), results))
    return cells


@dataclass(frozen=True)
class MonotoneReport:
    a_along_d1: bool
    a_along_d2: bool
    b_along_d1: bool
    b_along_d2: bool

    @property
    def monotone(self) -> bool:
        return self.a_along_d1 and self.a_along_d2 and self.b_along_d1 and self.b_along_d2


def monotone_diagnostic(table: RateTable) -> MonotoneReport:
    """Whether each estimated matrix is nondecreasing along each wear axis."""
    a, b = table.to_arrays()

    def up(x, axis):
        return bool(np.all(np.diff(x, axis=axis) >= 0))

    return MonotoneReport(up(a, 0), up(a, 1), up(b, 0), up(b, 1))
