from dataclasses import dataclass

from common.errors import ValidationError


@dataclass(frozen=True)
class WearState:
    """Deterioration of both parts, in 0.01 mm units."""

    d1: int
    d2: int

    def __post_init__(self):
        if self.d1 < 0 or self.d2 < 0:
            raise ValidationError("wear state must be non-negative, got ({}, {})".format(self.d1, self.d2))

    def capped(self, limits) -> "WearState":
        return WearState(min(self.d1, limits.l1), min(self.d2, limits.l2))


def bin_index(d: int, bin_width: int, bin_count: int) -> int:
    """1-based band of deterioration `d`; everything past the last band falls into it."""
    return min(d // bin_width + 1, bin_count)
