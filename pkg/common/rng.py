"""Seeded random streams for reproducible search and sampling."""

from __future__ import annotations

import numpy as np


class SeededRNG:
    """Thin wrapper around numpy's Generator.

    Child streams for worker threads come from `fork()`, which spawns from the
    seed sequence, so results never depend on which thread ran first.
    """

    def __init__(self, seed: int | np.random.SeedSequence):
        if isinstance(seed, np.random.SeedSequence):
            self._seq = seed
        else:
            self._seq = np.random.SeedSequence(int(seed))
        self._gen = np.random.Generator(np.random.PCG64(self._seq))

    @property
    def seed(self):
        return self._seq.entropy

    def random(self) -> float:
        return float(self._gen.random())

    def randint(self, low: int, high: int) -> int:
        """Uniform integer in [low, high], both ends included."""
        return int(self._gen.integers(low, high + 1))

    def integers(self, low: int, high: int, size) -> np.ndarray:
        return self._gen.integers(low, high + 1, size=size)

    def choice(self, seq):
        return seq[int(self._gen.integers(0, len(seq)))]

    def shuffle(self, seq: list) -> None:
        self._gen.shuffle(seq)

    def fork(self) -> SeededRNG:
        return SeededRNG(self._seq.spawn(1)[0])

    def forks(self, n: int) -> list[SeededRNG]:
        return [SeededRNG(child) for child in self._seq.spawn(n)]
