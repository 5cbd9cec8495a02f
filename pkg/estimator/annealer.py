"""Simulated annealing over rate tables, fitting the replace-at-limit simulation to a history."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from common import const
from common.log import logger
from common.rng import SeededRNG
from estimator.sa_config import SAConfig
from estimator.search_space import neighbor, random_table
from model.cost_model import Limits
from model.failure_history import FailureHistory
from model.rate_table import RateTable
from simulation.objective import SSEObjective

DEFAULT_SHAPE = (const.DEFAULT_BIN_COUNT, const.DEFAULT_BIN_COUNT)


@dataclass(frozen=True)
class TraceRow:
    iteration: int
    temperature: float
    objective: float  # current objective after the accept/reject decision
    proposed: float
    accepted: bool


@dataclass(frozen=True)
class TempDiagnostics:
    delta_plus: float
    m1: int  # sampled moves that decreased the objective
    m2: int  # sampled moves that increased it
    flat: bool = False


@dataclass(frozen=True)
class SARun:
    best: RateTable
    best_objective: float
    trace: Tuple[TraceRow, ...]
    initial_temperature: float
    seed: int
    diagnostics: Optional[TempDiagnostics] = None


def initial_solution(history: FailureHistory, limits: Limits, shape=DEFAULT_SHAPE, bin_width=const.DEFAULT_BIN_WIDTH, rate_max=const.DEFAULT_RATE_MAX) -> RateTable:
    """Constant table per part: the limit spread evenly over the part's mean inter-failure interval."""
    history.require_both_parts()
    rates = []
    for part in (1, 2):
        mean = float(np.mean(history.intervals(part)))
        rate = int(math.floor(limits.limit(part) / mean + 0.5))
        rates.append(min(max(1, rate), rate_max))
    m1, m2 = shape
    return RateTable.uniform(rates[0], rates[1], m1, m2, bin_width, rate_max)


def temperature_from_samples(deltas: Sequence[float], a0: float) -> Tuple[float, TempDiagnostics]:
    """Starting temperature at which roughly a0 of the sampled moves would be accepted.

    With m1 improving and m2 worsening samples of mean increase delta_plus the temperature is
    delta_plus / ln(m2 / (m2 a0 - m1 (1 - a0))), falling back to delta_plus / ln(1 / a0) when the
    denominator is not positive and to 1 when no sample worsened the objective.
    """
    deltas = np.asarray(deltas, dtype=float)
    m1 = int(np.count_nonzero(deltas < 0))
    m2 = int(np.count_nonzero(deltas > 0))
    if m2 == 0:
        return 1.0, TempDiagnostics(0.0, m1, 0, flat=True)
    delta_plus = float(deltas[deltas > 0].mean())
    denom = m2 * a0 - m1 * (1 - a0)
    if denom > 0:
        t0 = delta_plus / math.log(m2 / denom)
    else:
        t0 = delta_plus / math.log(1 / a0)
    return t0, TempDiagnostics(delta_plus, m1, m2)


def initial_temperature(
    history: FailureHistory,
    limits: Limits,
    config: SAConfig,
    rng: SeededRNG,
    shape=DEFAULT_SHAPE,
    bin_width=const.DEFAULT_BIN_WIDTH,
    objective: SSEObjective = None,
) -> Tuple[float, TempDiagnostics]:
    objective = objective or SSEObjective(history, limits)
    deltas = []
    for _ in range(config.init_temp_samples):
        base = random_table(shape, bin_width, config.rate_max, rng)
        deltas.append(objective.value(neighbor(base, rng)) - objective.value(base))
    t0, diag = temperature_from_samples(deltas, config.a0)
    if diag.flat:
        logger.warning("[SA] no sampled move increased the objective, initial temperature falls back to 1")
    else:
        logger.debug("[SA] initial temperature {:.4g} (delta+={:.4g}, m1={}, m2={})".format(t0, diag.delta_plus, diag.m1, diag.m2))
    return t0, diag


def anneal(history: FailureHistory, limits: Limits, config: SAConfig, shape=DEFAULT_SHAPE, bin_width=const.DEFAULT_BIN_WIDTH) -> SARun:
    """Metropolis search from the constant initial solution with geometric cooling.

    The temperature is multiplied by `cool` after every `iters_per_temp` iterations; the run
    stops after `total_iters` proposals and returns the best table seen.
    """
    rng = SeededRNG(config.seed)
    objective = SSEObjective(history, limits)
    current = initial_solution(history, limits, shape, bin_width, config.rate_max)
    current.check_covers(limits)
    cache = {}

    def evaluate(table: RateTable) -> float:
        key = (table.a, table.b)
        if key not in cache:
            cache[key] = objective.value(table)
        return cache[key]

    diag = None
    if config.initial_temp is not None:
        temp = float(config.initial_temp)
    else:
        temp, diag = initial_temperature(history, limits, config, rng.fork(), shape, bin_width, objective)
    t0 = temp

    f_cur = evaluate(current)
    best, f_best = current, f_cur
    trace = []
    for it in range(1, config.total_iters + 1):
        candidate = neighbor(current, rng)
        f_new = evaluate(candidate)
        delta = f_new - f_cur
        accepted = delta <= 0 or rng.random() < math.exp(-delta / temp)
        if accepted:
            current, f_cur = candidate, f_new
            if f_cur < f_best:
                best, f_best = current, f_cur
        trace.append(TraceRow(it, temp, f_cur, f_new, accepted))
        if it % config.iters_per_temp == 0:
            temp *= config.cool
            if it % (config.iters_per_temp * 100) == 0:
                logger.debug("[SA] seed={} iter={} temp={:.4g} current={} best={}".format(config.seed, it, temp, f_cur, f_best))
    logger.info("[SA] seed={} finished {} iterations, best objective {} (t0={:.4g})".format(config.seed, config.total_iters, f_best, t0))
    return SARun(best, f_best, tuple(trace), t0, config.seed, diag)
