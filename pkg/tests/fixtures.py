import os
import tempfile

from model.cost_model import CostModel, Limits
from model.failure_history import read_history
from model.rate_table import read_rate_table

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SCENARIOS = os.path.join(ROOT, "scenarios")

LIMITS = Limits(90, 90)
EXAMPLE1_COSTS = CostModel(100, 120, 220, 0.95)
EXAMPLE2_COSTS = CostModel(100, 300, 400, 0.95)


def scenario_path(name, filename):
    return os.path.join(SCENARIOS, name, filename)


def load_rates(name):
    return read_rate_table(scenario_path(name, "rates_a.csv"), scenario_path(name, "rates_b.csv"))


def load_history(name):
    return read_history(scenario_path(name, "history.csv"))


def slow_tests_enabled():
    return bool(os.environ.get("WEAR_SLOW_TESTS"))


class TempDirMixin:
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = self._tmp.name

    def tearDown(self):
        self._tmp.cleanup()

    def tmp_path(self, name):
        return os.path.join(self.tmp, name)
