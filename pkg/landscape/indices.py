"""Fitness-landscape indices of the rate-table search space.

Three indices tell whether local search suits the objective: the amplitude of a random
population, the mean length of improving walks to a local optimum, and the lag-1
autocorrelation of the objective along a random walk.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

import numpy as np

from common import const
from common.errors import ValidationError, ZeroMass, ZeroVariance
from common.rng import SeededRNG
from estimator.annealer import DEFAULT_SHAPE
from estimator.search_space import apply_move, moves, neighbor, random_table
from model.cost_model import Limits
from model.failure_history import FailureHistory
from model.rate_table import RateTable
from simulation.objective import SSEObjective

Objective = Callable[[RateTable], float]


class CachedObjective:
    def __init__(self, history: FailureHistory, limits: Limits):
        self._objective = SSEObjective(history, limits)
        self._cache = {}

    def __call__(self, table: RateTable) -> float:
        key = (table.a, table.b)
        value = self._cache.get(key)
        if value is None:
            value = self._objective.value(table)
            self._cache[key] = value
        return value


def amplitude(objectives: Sequence[float]) -> float:
    values = np.asarray(objectives, dtype=float)
    if values.size == 0:
        raise ValidationError("amplitude needs a non-empty population")
    total = float(values.sum())
    if total == 0:
        raise ZeroMass("population objectives sum to zero")
    return values.size * float(values.max() - values.min()) / total


def lag1_autocorrelation(series: Sequence[float]) -> float:
    """r(1) of a walk's objective series, normalised by the sample variance."""
    f = np.asarray(series, dtype=float)
    m = f.size
    if m < 3:
        raise ValidationError("autocorrelation needs at least 3 walk steps, got {}".format(m))
    dev = f - f.mean()
    var = float(np.dot(dev, dev)) / (m - 1)
    if var == 0:
        raise ZeroVariance("objective is constant along the walk")
    return float(np.dot(dev[:-1], dev[1:])) / (var * (m - 1))


def sample_population(
    history: FailureHistory,
    limits: Limits,
    size: int,
    rng: SeededRNG,
    shape=DEFAULT_SHAPE,
    bin_width=const.DEFAULT_BIN_WIDTH,
    rate_max=const.DEFAULT_RATE_MAX,
    objective: Objective = None,
) -> np.ndarray:
    objective = objective or CachedObjective(history, limits)
    return np.array([objective(random_table(shape, bin_width, rate_max, rng)) for _ in range(size)], dtype=float)


def walk_length(start: RateTable, objective: Objective, rng: SeededRNG) -> int:
    """Improving moves taken by first-improvement hill climbing, neighbours tried in random order."""
    current, f_cur = start, objective(start)
    steps = 0
    while True:
        candidates = moves(current)
        rng.shuffle(candidates)
        for move in candidates:
            table = apply_move(current, move)
            f = objective(table)
            if f < f_cur:
                current, f_cur = table, f
                steps += 1
                break
        else:
            return steps


def mean_walk_length(
    history: FailureHistory,
    limits: Limits,
    n_starts: int,
    rng: SeededRNG,
    shape=DEFAULT_SHAPE,
    bin_width=const.DEFAULT_BIN_WIDTH,
    rate_max=const.DEFAULT_RATE_MAX,
    objective: Objective = None,
    workers: int = None,
) -> float:
    if n_starts < 1:
        raise ValidationError("n_starts must be >= 1, got {}".format(n_starts))
    objective = objective or CachedObjective(history, limits)
    starts = [random_table(shape, bin_width, rate_max, rng) for _ in range(n_starts)]
    walkers = rng.forks(n_starts)
    if workers == 1:
        lengths = [walk_length(s, objective, r) for s, r in zip(starts, walkers)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            lengths = list(pool.map(lambda sr: walk_length(sr[0], objective, sr[1]), zip(starts, walkers)))
    return float(np.mean(lengths))


def random_walk(
    history: FailureHistory,
    limits: Limits,
    m: int,
    rng: SeededRNG,
    shape=DEFAULT_SHAPE,
    bin_width=const.DEFAULT_BIN_WIDTH,
    rate_max=const.DEFAULT_RATE_MAX,
    objective: Objective = None,
) -> np.ndarray:
    """Objective values at the m points of a random walk, the random start included."""
    objective = objective or CachedObjective(history, limits)
    table = random_table(shape, bin_width, rate_max, rng)
    series = [objective(table)]
    for _ in range(m - 1):
        table = neighbor(table, rng)
        series.append(objective(table))
    return np.array(series, dtype=float)


def autocorrelation_r1(
    history: FailureHistory,
    limits: Limits,
    m: int,
    rng: SeededRNG,
    shape=DEFAULT_SHAPE,
    bin_width=const.DEFAULT_BIN_WIDTH,
    rate_max=const.DEFAULT_RATE_MAX,
    objective: Objective = None,
) -> float:
    if m < 3:
        raise ValidationError("autocorrelation needs at least 3 walk steps, got {}".format(m))
    return lag1_autocorrelation(random_walk(history, limits, m, rng, shape, bin_width, rate_max, objective))
