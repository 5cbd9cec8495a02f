"""Typed view of the effective settings, shared by every command."""

import os
from dataclasses import dataclass
from typing import List, Optional, Tuple

from common.errors import ValidationError
from common.output_dir import OutputDir
from common.utils import config_hash, provenance_header
from estimator.sa_config import SAConfig
from model.cost_model import CostModel, Limits
from model.failure_history import FailureHistory, read_history
from model.rate_table import RateTable, read_rate_table

# settings that never change an artifact's content
_UNHASHED = ("output_dir", "workers", "debug")


@dataclass(frozen=True)
class Scenario:
    name: str
    costs: CostModel


@dataclass
class RunConfig:
    settings: dict
    history_path: str
    rates_a_path: str
    rates_b_path: str
    policy_path: str
    limits: Limits
    costs: CostModel
    sa: SAConfig
    tol: Optional[float]
    bin_width: int
    shape: Tuple[int, int]
    rate_max: int
    output_dir: str
    seed: int
    workers: int

    @classmethod
    def from_settings(cls, settings: dict, base_dir: str = ".") -> "RunConfig":
        def path(key):
            value = settings.get(key) or ""
            return value if not value or os.path.isabs(value) else os.path.join(base_dir, value)

        try:
            seed = int(settings["seed"])
            limits = Limits(int(settings["l1"]), int(settings["l2"]), int(settings["fresh_wear"]))
            costs = CostModel(float(settings["c1"]), float(settings["c2"]), float(settings["v"]), float(settings["alpha"]))
            sa = SAConfig(
                a0=float(settings["sa_a0"]),
                cool=float(settings["sa_cool"]),
                iters_per_temp=int(settings["sa_iters_per_temp"]),
                total_iters=int(settings["sa_total_iters"]),
                init_temp_samples=int(settings["sa_init_temp_samples"]),
                seed=seed,
                rate_max=int(settings["rate_max"]),
                initial_temp=None if settings["sa_initial_temp"] is None else float(settings["sa_initial_temp"]),
            )
            tol = None if settings["tol"] is None else float(settings["tol"])
            shape = (int(settings["bin_count1"]), int(settings["bin_count2"]))
        except (TypeError, ValueError) as e:
            raise ValidationError("bad setting value: {}".format(e))
        return cls(
            settings=dict(settings),
            history_path=path("history_path"),
            rates_a_path=path("rates_a_path"),
            rates_b_path=path("rates_b_path"),
            policy_path=path("policy_path"),
            limits=limits,
            costs=costs,
            sa=sa,
            tol=tol,
            bin_width=int(settings["bin_width"]),
            shape=shape,
            rate_max=int(settings["rate_max"]),
            output_dir=settings["output_dir"],
            seed=seed,
            workers=int(settings["workers"]),
        )

    def require(self, *paths):
        missing = [p for p in paths if not p or not os.path.exists(p)]
        if missing:
            raise ValidationError("input file not found: {}".format(", ".join(str(p) for p in missing)))

    @property
    def config_hash(self) -> str:
        return config_hash({k: v for k, v in self.settings.items() if k not in _UNHASHED})

    @property
    def header(self) -> str:
        return provenance_header(self.config_hash, self.seed)

    def out(self) -> OutputDir:
        return OutputDir(self.output_dir)

    def history(self) -> FailureHistory:
        self.require(self.history_path)
        return read_history(self.history_path)

    def rates(self) -> RateTable:
        self.require(self.rates_a_path, self.rates_b_path)
        table = read_rate_table(self.rates_a_path, self.rates_b_path, self.rate_max)
        table.check_covers(self.limits)
        return table

    def scenarios(self) -> List[Scenario]:
        """The configured costs, then one scenario per `eval_scenarios` entry overriding some of them."""
        out = [Scenario("base", self.costs)]
        for k, entry in enumerate(self.settings.get("eval_scenarios") or []):
            if not isinstance(entry, dict):
                raise ValidationError("eval_scenarios[{}] must be an object".format(k))
            unknown = set(entry) - {"name", "c1", "c2", "v", "alpha"}
            if unknown:
                raise ValidationError("eval_scenarios[{}] has unknown keys {}".format(k, sorted(unknown)))
            c = self.costs
            costs = CostModel(
                float(entry.get("c1", c.c1)),
                float(entry.get("c2", c.c2)),
                float(entry.get("v", c.v)),
                float(entry.get("alpha", c.alpha)),
            )
            out.append(Scenario(str(entry.get("name", "scenario{}".format(k + 1))), costs))
        return out
