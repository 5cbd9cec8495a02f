"""Independent seeded annealing runs and the cooling-schedule sensitivity grid."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from common import const
from common.errors import ValidationError
from common.log import logger
from estimator.annealer import DEFAULT_SHAPE, SARun, anneal
from estimator.sa_config import SAConfig
from model.cost_model import Limits
from model.failure_history import FailureHistory

DEFAULT_NS = (10, 15, 20)
DEFAULT_COOLS = (0.98, 0.99, 0.999)


def run_seeds(config: SAConfig, runs: int) -> List[int]:
    return [config.seed + k for k in range(runs)]


def anneal_many(
    history: FailureHistory,
    limits: Limits,
    config: SAConfig,
    runs: int,
    workers: int = None,
    shape=DEFAULT_SHAPE,
    bin_width=const.DEFAULT_BIN_WIDTH,
) -> List[SARun]:
    """Runs `runs` restarts seeded seed, seed+1, ...; results come back in seed order."""
    if runs < 1:
        raise ValidationError("runs must be >= 1, got {}".format(runs))
    configs = [config.with_(seed=s) for s in run_seeds(config, runs)]
    if runs == 1 or workers == 1:
        return [anneal(history, limits, c, shape, bin_width) for c in configs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(anneal, history, limits, c, shape, bin_width) for c in configs]
        return [f.result() for f in futures]


@dataclass(frozen=True)
class GridCell:
    iters_per_temp: int
    cool: float
    t0: float  # mean starting temperature of the runs
    results: Tuple[float, ...]  # best objective per run

    @property
    def average(self) -> float:
        return float(np.mean(self.results))


def summarize(config: SAConfig, runs: Sequence[SARun]) -> GridCell:
    return GridCell(config.iters_per_temp, config.cool, float(np.mean([r.initial_temperature for r in runs])), tuple(r.best_objective for r in runs))


def sensitivity_grid(
    history: FailureHistory,
    limits: Limits,
    config: SAConfig,
    ns: Sequence[int] = DEFAULT_NS,
    cools: Sequence[float] = DEFAULT_COOLS,
    runs: int = 10,
    workers: int = None,
    shape=DEFAULT_SHAPE,
    bin_width=const.DEFAULT_BIN_WIDTH,
) -> List[GridCell]:
    cells = []
    for n in ns:
        for cool in cools:
            cell_config = config.with_(iters_per_temp=n, cool=cool)
            results = anneal_many(history, limits, cell_config, runs, workers, shape, bin_width)
            cell = summarize(cell_config, results)
            logger.info("[SA] grid n={} cool={} average best {:.4g}".format(n, cool, cell.average))
            cells.append(cell)
    return cells
