from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np
import pandas as pd

from common import const
from common.errors import ValidationError, ZeroVariance
from common.log import logger
from common.rng import SeededRNG
from common.utils import read_csv, write_csv, write_text
from estimator.annealer import DEFAULT_SHAPE
from landscape.indices import CachedObjective, amplitude, lag1_autocorrelation, mean_walk_length, random_walk, sample_population
from model.cost_model import Limits
from model.failure_history import FailureHistory


@dataclass(frozen=True)
class LandscapeReport:
    amplitude: float
    mean_walk_length: float
    r1: Optional[float]  # None when the walk's objective never changed
    sample_sizes: Dict[str, int] = field(default_factory=dict)
    seed: int = 0
    notes: Tuple[str, ...] = ()

    def to_text(self) -> str:
        lines = [
            "amplitude={:.6g}".format(self.amplitude),
            "mean_walk_length={:.6g}".format(self.mean_walk_length),
            "r1={}".format("undefined" if self.r1 is None else "{:.6g}".format(self.r1)),
        ]
        lines += ["samples.{}={}".format(k, v) for k, v in sorted(self.sample_sizes.items())]
        lines.append("seed={}".format(self.seed))
        lines += ["note={}".format(n) for n in self.notes]
        return "\n".join(lines) + "\n"


def analyze(
    history: FailureHistory,
    limits: Limits,
    population: int,
    starts: int,
    walk_steps: int,
    seed: int,
    shape=DEFAULT_SHAPE,
    bin_width=const.DEFAULT_BIN_WIDTH,
    rate_max=const.DEFAULT_RATE_MAX,
    workers: int = None,
):
    """Returns (LandscapeReport, walk objective series). Each index draws from its own child stream."""
    objective = CachedObjective(history, limits)
    pop_rng, walk_rng, r1_rng = SeededRNG(seed).forks(3)
    amp = amplitude(sample_population(history, limits, population, pop_rng, shape, bin_width, rate_max, objective))
    mwl = mean_walk_length(history, limits, starts, walk_rng, shape, bin_width, rate_max, objective, workers)
    series = random_walk(history, limits, walk_steps, r1_rng, shape, bin_width, rate_max, objective)
    notes = []
    try:
        r1 = lag1_autocorrelation(series)
    except ZeroVariance as e:
        logger.warning("[LANDSCAPE] {}".format(e))
        r1 = None
        notes.append("zero variance: {}".format(e))
    logger.info("[LANDSCAPE] amplitude={:.4g} walk_length={:.4g} r1={}".format(amp, mwl, r1))
    report = LandscapeReport(amp, mwl, r1, {"population": population, "starts": starts, "walk_steps": walk_steps}, seed, tuple(notes))
    return report, series


def write_report(report: LandscapeReport, series: np.ndarray, report_path, walk_path, header: str = None):
    write_text(report_path, report.to_text(), header=header)
    df = pd.DataFrame({"step": np.arange(len(series)), "objective": series})
    write_csv(df, walk_path, header=header)


def read_walk(path) -> np.ndarray:
    df = read_csv(path)
    if not np.array_equal(df["step"].to_numpy(), np.arange(len(df))):
        raise ValidationError("{}: walk steps must run 0..{}".format(path, len(df) - 1))
    return df["objective"].to_numpy(dtype=float)
