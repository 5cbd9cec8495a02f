import math
import unittest

from common.errors import DegenerateHistory, ValidationError
from common.rng import SeededRNG
from estimator.annealer import anneal, initial_solution, initial_temperature, temperature_from_samples
from estimator.report import monotone_diagnostic, read_summary, read_trace, write_summary, write_trace
from estimator.restarts import anneal_many, sensitivity_grid
from estimator.sa_config import SAConfig
from estimator.search_space import moves, neighbor, random_table
from model.cost_model import Limits
from model.failure_history import FailureEvent, FailureHistory, Part
from model.rate_table import RateTable
from simulation.objective import SSEObjective
from simulation.wear_simulator import simulate_limit_policy
from tests.fixtures import LIMITS, TempDirMixin, load_history, slow_tests_enabled

TRUTH = RateTable([[2, 2], [3, 3]], [[2, 3], [2, 3]], bin_width=9)
SMALL_LIMITS = Limits(18, 18)
SMALL_SHAPE = (2, 2)


def synthetic_history():
    return simulate_limit_policy(TRUTH, SMALL_LIMITS, max_days=30).history


def starting_objective(history):
    return SSEObjective(history, SMALL_LIMITS).value(initial_solution(history, SMALL_LIMITS, SMALL_SHAPE, 9))


class TestSAConfig(unittest.TestCase):
    def test_ranges(self):
        """参数越界时报错，cool=1允许"""
        SAConfig(cool=1.0)
        for bad in ({"a0": 0}, {"a0": 1}, {"cool": 0}, {"iters_per_temp": 0}, {"total_iters": 5, "iters_per_temp": 10}, {"init_temp_samples": 1}, {"initial_temp": 0}):
            with self.assertRaises(ValidationError, msg=str(bad)):
                SAConfig(**bad)


class TestInitialSolution(unittest.TestCase):
    def test_example1_history(self):
        """例1历史：部件1平均间隔约19.6天，极限90，初始速率为5"""
        table = initial_solution(load_history("example1"), LIMITS)
        self.assertTrue(all(x == 5 for row in table.a for x in row))

    def test_single_late_event(self):
        """唯一事件在第90天，速率为1"""
        history = FailureHistory((FailureEvent(90, Part.BOTH),))
        table = initial_solution(history, LIMITS)
        self.assertEqual(table.a[0][0], 1)
        self.assertEqual(table.b[0][0], 1)

    def test_clamped_to_rate_max(self):
        """速率上限截断到rate_max"""
        history = FailureHistory((FailureEvent(1, Part.BOTH),))
        self.assertEqual(initial_solution(history, LIMITS).a[0][0], 20)

    def test_degenerate(self):
        """缺少部件2的事件时报错"""
        with self.assertRaises(DegenerateHistory):
            initial_solution(FailureHistory((FailureEvent(5, Part.PART1),)), LIMITS)


class TestNeighbor(unittest.TestCase):
    def test_single_unit_change(self):
        """每次移动只改变一个格子的值，且变化量为1"""
        rng = SeededRNG(3)
        table = random_table((3, 3), 9, 20, rng)
        for _ in range(200):
            nxt = neighbor(table, rng)
            diffs = [
                (x, y)
                for which in (0, 1)
                for row_x, row_y in zip(table.matrix(which), nxt.matrix(which))
                for x, y in zip(row_x, row_y)
                if x != y
            ]
            self.assertEqual(len(diffs), 1)
            self.assertEqual(abs(diffs[0][0] - diffs[0][1]), 1)
            table = nxt

    def test_bounds(self):
        """全1只能增加，全为上限只能减少"""
        rng = SeededRNG(5)
        ones = RateTable.uniform(1, m1=2, m2=2)
        tops = RateTable.uniform(20, m1=2, m2=2)
        for _ in range(50):
            changed = [x for row in neighbor(ones, rng).a + neighbor(ones, rng).b for x in row if x != 1]
            self.assertTrue(all(x == 2 for x in changed))
            lowered = [x for row in neighbor(tops, rng).a + neighbor(tops, rng).b for x in row if x != 20]
            self.assertTrue(all(x == 19 for x in lowered))

    def test_no_legal_move(self):
        """rate_max=1时没有合法移动，原样返回"""
        table = RateTable.uniform(1, m1=1, m2=1, bin_width=90, rate_max=1)
        self.assertEqual(moves(table), [])
        self.assertEqual(neighbor(table, SeededRNG(0)), table)


class TestInitialTemperature(unittest.TestCase):
    def test_only_increases(self):
        """全部Δ=+2、m1=0、a0=0.5时 T0=2/ln2"""
        t0, diag = temperature_from_samples([2.0] * 10, 0.5)
        self.assertAlmostEqual(t0, 2 / math.log(2))
        self.assertEqual((diag.m1, diag.m2), (0, 10))

    def test_mixed_samples(self):
        """有升有降时按m1、m2计算"""
        t0, diag = temperature_from_samples([4.0, 4.0, 4.0, -1.0], 0.5)
        self.assertAlmostEqual(t0, 4 / math.log(3 / (1.5 - 0.5)))
        self.assertEqual((diag.m1, diag.m2), (1, 3))

    def test_fallback_when_decreases_dominate(self):
        """分母非正时退回Δ⁺/ln(1/a0)"""
        t0, _ = temperature_from_samples([3.0, -1.0, -1.0, -1.0], 0.5)
        self.assertAlmostEqual(t0, 3 / math.log(2))

    def test_flat(self):
        """没有变差的样本时温度取1"""
        t0, diag = temperature_from_samples([0.0, -1.0, 0.0], 0.5)
        self.assertEqual(t0, 1.0)
        self.assertTrue(diag.flat)

    def test_sampled_temperature_positive(self):
        """采样估计的初始温度为正"""
        history = synthetic_history()
        config = SAConfig(init_temp_samples=50)
        t0, diag = initial_temperature(history, SMALL_LIMITS, config, SeededRNG(1), SMALL_SHAPE, 9)
        self.assertGreater(t0, 0)
        self.assertLessEqual(diag.m1 + diag.m2, 50)


class TestAnneal(TempDirMixin, unittest.TestCase):
    def config(self, **kw):
        base = dict(total_iters=600, iters_per_temp=10, init_temp_samples=20, seed=11, cool=0.95)
        base.update(kw)
        return SAConfig(**base)

    def test_reproducible(self):
        """相同种子两次运行结果完全一致"""
        history = synthetic_history()
        first = anneal(history, SMALL_LIMITS, self.config(), SMALL_SHAPE, 9)
        second = anneal(history, SMALL_LIMITS, self.config(), SMALL_SHAPE, 9)
        self.assertEqual(first, second)

    def test_trace_invariants(self):
        """降温按几何级数进行；目标下降的移动总被接受；最优值不高于轨迹中任意当前值"""
        history = synthetic_history()
        run = anneal(history, SMALL_LIMITS, self.config(), SMALL_SHAPE, 9)
        self.assertEqual(len(run.trace), 600)
        prev = starting_objective(history)
        for row in run.trace:
            expected_temp = run.initial_temperature * 0.95 ** ((row.iteration - 1) // 10)
            self.assertAlmostEqual(row.temperature, expected_temp, delta=1e-9 * run.initial_temperature)
            if row.proposed <= prev:
                self.assertTrue(row.accepted)
            self.assertEqual(row.objective, row.proposed if row.accepted else prev)
            self.assertLessEqual(run.best_objective, row.objective)
            prev = row.objective
        self.assertEqual(SSEObjective(history, SMALL_LIMITS).value(run.best), run.best_objective)

    def test_acceptance_frequency_matches_metropolis(self):
        """按温度分组，劣化移动的接受比例与exp(-Δ/T)的均值相差不超过5个百分点"""
        history = synthetic_history()
        for seed, temp in ((21, 2.0), (22, 10.0), (23, 50.0)):
            run = anneal(history, SMALL_LIMITS, self.config(cool=1.0, initial_temp=temp, total_iters=8000, seed=seed), SMALL_SHAPE, 9)
            prev = starting_objective(history)
            accepted, expected = [], []
            for row in run.trace:
                if row.proposed > prev:
                    accepted.append(1.0 if row.accepted else 0.0)
                    expected.append(math.exp(-(row.proposed - prev) / row.temperature))
                prev = row.objective
            self.assertGreater(len(accepted), 1000, temp)
            self.assertLess(abs(sum(accepted) / len(accepted) - sum(expected) / len(expected)), 0.05, temp)

    def test_constant_temperature(self):
        """cool=1时温度始终不变"""
        run = anneal(synthetic_history(), SMALL_LIMITS, self.config(cool=1.0, initial_temp=7.5), SMALL_SHAPE, 9)
        self.assertTrue(all(row.temperature == 7.5 for row in run.trace))
        self.assertEqual(run.initial_temperature, 7.5)
        self.assertIsNone(run.diagnostics)

    def test_trace_round_trip(self):
        """轨迹写出后读回相等"""
        run = anneal(synthetic_history(), SMALL_LIMITS, self.config(total_iters=50), SMALL_SHAPE, 9)
        write_trace(run, self.tmp_path("trace.csv"), "# wear-replace test")
        self.assertEqual(read_trace(self.tmp_path("trace.csv")), run.trace)

    def test_restarts_independent_of_threads(self):
        """多线程与单线程的重启结果一致，种子依次递增"""
        history = synthetic_history()
        config = self.config(total_iters=100, initial_temp=5.0)
        sequential = anneal_many(history, SMALL_LIMITS, config, 3, 1, SMALL_SHAPE, 9)
        threaded = anneal_many(history, SMALL_LIMITS, config, 3, 3, SMALL_SHAPE, 9)
        self.assertEqual(sequential, threaded)
        self.assertEqual([r.seed for r in threaded], [11, 12, 13])

    def test_sensitivity_grid_and_summary(self):
        """敏感性网格按(n, cool)顺序输出，汇总表写出后读回相等"""
        history = synthetic_history()
        config = self.config(total_iters=40, initial_temp=5.0)
        cells = sensitivity_grid(history, SMALL_LIMITS, config, ns=(5, 10), cools=(0.9, 1.0), runs=2, workers=2, shape=SMALL_SHAPE, bin_width=9)
        self.assertEqual([(c.iters_per_temp, c.cool) for c in cells], [(5, 0.9), (5, 1.0), (10, 0.9), (10, 1.0)])
        self.assertTrue(all(len(c.results) == 2 for c in cells))
        path = self.tmp_path("summary.csv")
        write_summary(cells, path, "# wear-replace test")
        with open(path) as f:
            lines = f.read().splitlines()
        self.assertEqual(lines[0], "# wear-replace test")
        self.assertEqual(lines[1], "n,t0,cool,run1,run2,average")
        self.assertEqual(len(lines), 6)
        self.assertEqual(read_summary(path), cells)

    @unittest.skipUnless(slow_tests_enabled(), "set WEAR_SLOW_TESTS=1 to run")
    def test_recovers_synthetic_rates(self):
        """由已知速率生成的历史，退火在30000次迭代内达到目标值0"""
        history = synthetic_history()
        runs = anneal_many(history, SMALL_LIMITS, SAConfig(seed=100), 10, None, SMALL_SHAPE, 9)
        self.assertGreaterEqual(sum(1 for r in runs if r.best_objective == 0), 8)

    @unittest.skipUnless(slow_tests_enabled(), "set WEAR_SLOW_TESTS=1 to run")
    def test_example1_grid(self):
        """例1的3x3敏感性网格，每格平均最优值都优于初始解"""
        history = load_history("example1")
        start = SSEObjective(history, LIMITS).value(initial_solution(history, LIMITS))
        cells = sensitivity_grid(history, LIMITS, SAConfig(seed=1, initial_temp=220), runs=10)
        self.assertEqual(len(cells), 9)
        for cell in cells:
            self.assertLess(cell.average, start, cell)


class TestMonotoneDiagnostic(unittest.TestCase):
    def test_detects_decrease(self):
        """沿d2方向递减的矩阵判为非单调"""
        self.assertTrue(monotone_diagnostic(RateTable.uniform(3, m1=2, m2=2)).monotone)
        report = monotone_diagnostic(RateTable([[3, 2], [3, 3]], [[1, 1], [1, 1]], 9))
        self.assertFalse(report.monotone)
        self.assertFalse(report.a_along_d2)
        self.assertTrue(report.a_along_d1)


if __name__ == "__main__":
    unittest.main()
