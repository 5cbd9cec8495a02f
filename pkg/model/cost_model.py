from dataclasses import dataclass

from common import const
from common.errors import ValidationError
from common.log import logger


@dataclass(frozen=True)
class CostModel:
    c1: float  # replacement cost of part 1
    c2: float  # replacement cost of part 2
    v: float  # simultaneous replacement cost
    alpha: float  # discount factor

    def __post_init__(self):
        for name in ("c1", "c2", "v"):
            if getattr(self, name) < 0:
                raise ValidationError("cost {} must be non-negative, got {}".format(name, getattr(self, name)))
        if not 0 <= self.alpha < 1:
            raise ValidationError("discount factor must lie in [0, 1), got {}".format(self.alpha))
        if self.v > self.c1 + self.c2:
            logger.warning("[Config] joint replacement cost {} exceeds c1 + c2 = {}, joint replacement is dominated".format(self.v, self.c1 + self.c2))

    def scaled(self, factor: float) -> "CostModel":
        return CostModel(self.c1 * factor, self.c2 * factor, self.v * factor, self.alpha)

    def with_joint_cost(self, v: float) -> "CostModel":
        return CostModel(self.c1, self.c2, v, self.alpha)

    @property
    def max_cost(self) -> float:
        return max(self.c1, self.c2, self.v)


@dataclass(frozen=True)
class Limits:
    l1: int  # replacement limit of part 1
    l2: int  # replacement limit of part 2
    fresh_wear: int = const.DEFAULT_FRESH_WEAR  # wear of a newly installed part

    def __post_init__(self):
        if self.l1 < 1 or self.l2 < 1:
            raise ValidationError("replacement limits must be >= 1, got ({}, {})".format(self.l1, self.l2))
        if not 0 <= self.fresh_wear < min(self.l1, self.l2):
            raise ValidationError("fresh_wear must lie in [0, {}), got {}".format(min(self.l1, self.l2), self.fresh_wear))

    def limit(self, part: int) -> int:
        return self.l1 if part == 1 else self.l2

    @property
    def shape(self):
        """Shape of the capped DP grid, states 0..l inclusive."""
        return self.l1 + 1, self.l2 + 1
