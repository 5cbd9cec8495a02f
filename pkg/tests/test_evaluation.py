import unittest

import numpy as np

from common.errors import DivisionByZero, ValidationError
from evaluation.cost_report import (
    BOTH,
    REPLACE1,
    REPLACE2,
    CostReport,
    ScenarioComparison,
    compare,
    cycle_average_cost,
    historical_cost,
    policy_cost,
    read_comparison,
    write_comparison,
)
from model.cost_model import CostModel
from model.failure_history import Part
from solver.bellman import Action, PolicyGrid, extract_policy, replace_at_limit_policy, value_iteration
from simulation.wear_simulator import simulate_limit_policy
from tests.fixtures import EXAMPLE1_COSTS, EXAMPLE2_COSTS, LIMITS, TempDirMixin, load_history, load_rates

HORIZON = 10000


def optimal_policy(rates, costs, tol=None):
    vf, _ = value_iteration(rates, costs, LIMITS, tol)
    return extract_policy(vf, rates, costs, LIMITS)


class TestHistoricalCost(unittest.TestCase):
    def test_example1(self):
        """例1：28次同时更换，550天"""
        report = historical_cost(load_history("example1"), EXAMPLE1_COSTS)
        self.assertEqual(report.total_cost, 6160)
        self.assertEqual(report.horizon_days, 550)
        self.assertAlmostEqual(report.mean_cost_per_day, 6160 / 550)

    def test_example2(self):
        """例2：部件1更换7次、部件2更换6次、同时更换1次，共114天"""
        report = historical_cost(load_history("example2"), EXAMPLE2_COSTS)
        self.assertEqual(report.replacements, {REPLACE1: 7, REPLACE2: 6, BOTH: 1})
        self.assertEqual(report.total_cost, 2900)
        self.assertAlmostEqual(report.mean_cost_per_day, 2900 / 114)

    def test_zero_costs(self):
        """成本全为0时平均成本为0，无法计算降低比例"""
        report = historical_cost(load_history("example2"), CostModel(0, 0, 0, 0.9))
        self.assertEqual(report.mean_cost_per_day, 0)
        with self.assertRaises(DivisionByZero):
            compare(report, report)


class TestCompare(unittest.TestCase):
    def test_percent_reduction(self):
        """降低比例为相对历史平均成本的百分比"""
        hist = CostReport(10.0, 100.0, 10)
        self.assertAlmostEqual(compare(CostReport(8.0, 80.0, 10), hist), 20.0)
        self.assertAlmostEqual(compare(CostReport(12.0, 120.0, 10), hist), -20.0)
        self.assertEqual(compare(hist, hist), 0.0)


class TestPolicyCost(unittest.TestCase):
    def test_limit_policy_matches_simulator(self):
        """按极限更换策略逐日运行H+1天，与模拟器前H天的更换次数一致"""
        rates = load_rates("example1")
        days = 550
        sim = simulate_limit_policy(rates, LIMITS, max_days=days).history
        expected = {
            REPLACE1: sum(1 for e in sim.events if e.which is Part.PART1),
            REPLACE2: sum(1 for e in sim.events if e.which is Part.PART2),
            BOTH: sum(1 for e in sim.events if e.which is Part.BOTH),
        }
        run = policy_cost(replace_at_limit_policy(LIMITS), rates, EXAMPLE1_COSTS, LIMITS, days + 1)
        self.assertEqual(run.replacements, expected)

    def test_inadmissible_policy_rejected(self):
        """极限处不更换的策略不可评估"""
        proceed = PolicyGrid(np.zeros(LIMITS.shape, dtype=np.int8))
        with self.assertRaises(ValidationError):
            policy_cost(proceed, load_rates("example1"), EXAMPLE1_COSTS, LIMITS, 100)
        with self.assertRaises(ValidationError):
            cycle_average_cost(proceed, load_rates("example1"), EXAMPLE1_COSTS, LIMITS)

    def test_horizon_must_be_positive(self):
        """评估天数须为正"""
        with self.assertRaises(ValidationError):
            policy_cost(replace_at_limit_policy(LIMITS), load_rates("example1"), EXAMPLE1_COSTS, LIMITS, 0)

    def test_optimal_no_worse_than_limit_policy(self):
        """最优策略的周期平均成本不高于按极限更换"""
        for name, costs in (("example1", EXAMPLE1_COSTS), ("example2", EXAMPLE2_COSTS)):
            rates = load_rates(name)
            best = cycle_average_cost(optimal_policy(rates, costs), rates, costs, LIMITS)
            limit = cycle_average_cost(replace_at_limit_policy(LIMITS), rates, costs, LIMITS)
            self.assertLessEqual(best, limit + 1e-9, name)

    def test_cycle_average_close_to_long_run(self):
        """长期逐日运行的平均成本接近周期平均成本"""
        rates = load_rates("example2")
        policy = optimal_policy(rates, EXAMPLE2_COSTS)
        run = policy_cost(policy, rates, EXAMPLE2_COSTS, LIMITS, HORIZON)
        exact = cycle_average_cost(policy, rates, EXAMPLE2_COSTS, LIMITS)
        self.assertLess(abs(run.mean_cost_per_day - exact), 0.05 * exact)


class TestReductions(unittest.TestCase):
    def reduction(self, name, costs):
        rates = load_rates(name)
        run = policy_cost(optimal_policy(rates, costs), rates, costs, LIMITS, HORIZON)
        return compare(run, historical_cost(load_history(name), costs))

    def test_example1(self):
        """例1最优策略相对历史记录至少降低10%"""
        self.assertGreaterEqual(self.reduction("example1", EXAMPLE1_COSTS), 10.0)

    def test_example2(self):
        """例2最优策略相对历史记录至少降低20%"""
        self.assertGreaterEqual(self.reduction("example2", EXAMPLE2_COSTS), 20.0)

    def test_cheaper_joint_replacement_uses_more_joint_actions(self):
        """联合更换更便宜时同时更换的状态更多"""
        rates = load_rates("example1")
        base = optimal_policy(rates, EXAMPLE1_COSTS)
        cheaper = optimal_policy(rates, EXAMPLE1_COSTS.with_joint_cost(200))
        self.assertGreater(int(np.count_nonzero(cheaper.action == Action.BOTH)), int(np.count_nonzero(base.action == Action.BOTH)))

    def test_scale_invariance(self):
        """成本整体乘2，策略与降低比例不变"""
        rates = load_rates("example2")
        history = load_history("example2")
        doubled = EXAMPLE2_COSTS.scaled(2)
        p1 = optimal_policy(rates, EXAMPLE2_COSTS, tol=1e-6)
        p2 = optimal_policy(rates, doubled, tol=2e-6)
        self.assertEqual(p1, p2)
        r1 = compare(policy_cost(p1, rates, EXAMPLE2_COSTS, LIMITS, 1000), historical_cost(history, EXAMPLE2_COSTS))
        r2 = compare(policy_cost(p2, rates, doubled, LIMITS, 1000), historical_cost(history, doubled))
        self.assertAlmostEqual(r1, r2)


class TestComparisonIO(TempDirMixin, unittest.TestCase):
    def test_round_trip(self):
        """比较结果写出后读回相等"""
        rows = [ScenarioComparison("base", 11.2, 9.5, 15.178571428571429), ScenarioComparison("v200", 10.18, 8.0, 21.41)]
        path = self.tmp_path("comparison.csv")
        write_comparison(rows, path, "# wear-replace test")
        with open(path) as f:
            self.assertEqual(f.read().splitlines()[1], "scenario,historical_mean,policy_mean,reduction_pct")
        self.assertEqual(read_comparison(path), rows)


if __name__ == "__main__":
    unittest.main()
