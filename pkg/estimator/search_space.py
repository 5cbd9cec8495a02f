"""Rate tables as points of a discrete search space.

A move changes one entry of one matrix by one unit and never leaves [1, rate_max].
"""

from typing import List, Tuple

from common import const
from common.rng import SeededRNG
from model.rate_table import RateTable

# (matrix, row, column, new value)
Move = Tuple[int, int, int, int]


def random_table(shape, bin_width: int, rate_max: int, rng: SeededRNG) -> RateTable:
    m1, m2 = shape
    a = rng.integers(1, rate_max, (m1, m2))
    b = rng.integers(1, rate_max, (m1, m2))
    return RateTable(a.tolist(), b.tolist(), bin_width, rate_max)


def apply_move(rates: RateTable, move: Move) -> RateTable:
    which, i, j, value = move
    return rates.with_entry(which, i, j, value)


def moves(rates: RateTable) -> List[Move]:
    """Every legal single-entry move, in a fixed order."""
    out = []
    for which in (0, 1):
        matrix = rates.matrix(which)
        for i in range(rates.m1):
            for j in range(rates.m2):
                x = matrix[i][j]
                if x > 1:
                    out.append((which, i, j, x - 1))
                if x < rates.rate_max:
                    out.append((which, i, j, x + 1))
    return out


def random_move(rates: RateTable, rng: SeededRNG) -> Move:
    """Uniform matrix, cell and direction; a draw blocked by a bound is redrawn.

    After NEIGHBOR_RETRIES blocked draws the move is taken uniformly from the legal ones.
    Returns None when the table admits no move at all (rate_max = 1).
    """
    for _ in range(const.NEIGHBOR_RETRIES):
        which = rng.randint(0, 1)
        i = rng.randint(0, rates.m1 - 1)
        j = rng.randint(0, rates.m2 - 1)
        value = rates.matrix(which)[i][j] + (1 if rng.random() < 0.5 else -1)
        if 1 <= value <= rates.rate_max:
            return which, i, j, value
    legal = moves(rates)
    return rng.choice(legal) if legal else None


def neighbor(rates: RateTable, rng: SeededRNG) -> RateTable:
    move = random_move(rates, rng)
    return rates if move is None else apply_move(rates, move)
