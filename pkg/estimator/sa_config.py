from dataclasses import dataclass, replace
from typing import Optional

from common import const
from common.errors import ValidationError


@dataclass(frozen=True)
class SAConfig:
    a0: float = 0.5  # share of worsening moves accepted at the initial temperature
    cool: float = 0.999  # geometric cooling coefficient
    iters_per_temp: int = 20
    total_iters: int = 30000
    init_temp_samples: int = 1000
    seed: int = 0
    rate_max: int = const.DEFAULT_RATE_MAX
    initial_temp: Optional[float] = None  # fixed starting temperature, estimated when unset

    def __post_init__(self):
        if not 0 < self.a0 < 1:
            raise ValidationError("a0 must lie in (0, 1), got {}".format(self.a0))
        if not 0 < self.cool <= 1:
            raise ValidationError("cool must lie in (0, 1], got {}".format(self.cool))
        if self.iters_per_temp < 1 or self.total_iters < self.iters_per_temp:
            raise ValidationError("need total_iters >= iters_per_temp >= 1, got {} and {}".format(self.total_iters, self.iters_per_temp))
        if self.init_temp_samples < 2:
            raise ValidationError("init_temp_samples must be >= 2, got {}".format(self.init_temp_samples))
        if self.rate_max < 1:
            raise ValidationError("rate_max must be >= 1, got {}".format(self.rate_max))
        if self.initial_temp is not None and self.initial_temp <= 0:
            raise ValidationError("initial_temp must be positive, got {}".format(self.initial_temp))

    @property
    def rate_bounds(self):
        return 1, self.rate_max

    def with_(self, **changes) -> "SAConfig":
        return replace(self, **changes)
