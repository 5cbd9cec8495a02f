import filecmp
import os
import unittest

from app import main
from common import const
from tests.fixtures import TempDirMixin, scenario_path

EXAMPLE1 = scenario_path("example1", "config.json")


class TestMain(TempDirMixin, unittest.TestCase):
    def run_verb(self, verb, out, *extra, config=EXAMPLE1):
        return main([verb, "--config", config, "--out", out] + list(extra))

    def first_line(self, path):
        with open(path, encoding="utf-8") as f:
            return f.readline().rstrip("\n")

    def test_simulate_writes_stamped_events(self):
        """模拟产物首行带版本、配置哈希与种子"""
        out = self.tmp_path("sim")
        self.assertEqual(self.run_verb("simulate", out, "--seed", "3", "--set", "sim_trajectory=true"), const.EXIT_OK)
        header = self.first_line(os.path.join(out, "events.csv"))
        self.assertTrue(header.startswith("# wear-replace 0.3.0 config="))
        self.assertTrue(header.endswith(" seed=3"))
        self.assertTrue(os.path.exists(os.path.join(out, "trajectory.csv")))

    def test_reruns_are_byte_identical(self):
        """相同配置与种子重复运行，产物逐字节一致"""
        first, second = self.tmp_path("a"), self.tmp_path("b")
        for out in (first, second):
            self.assertEqual(self.run_verb("solve", out, "--set", "export_lp=true"), const.EXIT_OK)
        names = ["value.csv", "policy.csv", "policy.ppm", "policy.legend.txt", "thresholds.csv", "structure.txt", "model.lp"]
        match, mismatch, errors = filecmp.cmpfiles(first, second, names, shallow=False)
        self.assertEqual(match, names)
        self.assertEqual(mismatch + errors, [])

    def test_estimate_and_landscape_reruns_are_byte_identical(self):
        """估计与地形分析重复运行，产物逐字节一致"""
        verbs = {
            "estimate": (
                ["--set", "sa_total_iters=200", "--set", "sa_runs=3", "--set", "sa_init_temp_samples=20"],
                ["rates_a.csv", "rates_b.csv", "trace.csv", "summary.csv", "estimate.txt"],
            ),
            "landscape": (
                ["--set", "landscape_population=20", "--set", "landscape_starts=3", "--set", "landscape_walk_steps=30"],
                ["landscape.txt", "walk.csv"],
            ),
        }
        for verb, (extra, names) in verbs.items():
            first, second = self.tmp_path(verb + "_a"), self.tmp_path(verb + "_b")
            for out in (first, second):
                self.assertEqual(self.run_verb(verb, out, *extra), const.EXIT_OK, verb)
            match, mismatch, errors = filecmp.cmpfiles(first, second, names, shallow=False)
            self.assertEqual(match, names)
            self.assertEqual(mismatch + errors, [])

    def test_solve_reports_structure(self):
        """求解后结构检查通过"""
        out = self.tmp_path("solve")
        self.assertEqual(self.run_verb("solve", out), const.EXIT_OK)
        with open(os.path.join(out, "structure.txt")) as f:
            text = f.read()
        self.assertIn("status=pass", text)

    def test_export_lp(self):
        """导出的LP文件格式完整"""
        out = self.tmp_path("lp")
        self.assertEqual(self.run_verb("export-lp", out), const.EXIT_OK)
        with open(os.path.join(out, "model.lp")) as f:
            text = f.read()
        self.assertTrue(text.startswith("\\"))
        self.assertIn("Subject To", text)
        self.assertTrue(text.rstrip().endswith("End"))

    def test_evaluate_writes_each_scenario(self):
        """每个场景输出一行比较结果"""
        out = self.tmp_path("eval")
        self.assertEqual(self.run_verb("evaluate", out, "--set", "eval_horizon=2000"), const.EXIT_OK)
        with open(os.path.join(out, "comparison.csv")) as f:
            lines = f.read().splitlines()
        self.assertEqual([line.split(",")[0] for line in lines[2:]], ["base", "v200"])

    def test_degenerate_history_exit_code(self):
        """历史缺少部件2时以校验错误退出"""
        history = self.tmp_path("history.csv")
        with open(history, "w") as f:
            f.write("time,part\n10,1\n25,1\n")
        with self.assertLogs("wear", level="ERROR") as logs:
            code = self.run_verb("estimate", self.tmp_path("est"), "--set", "history_path=" + history)
        self.assertEqual(code, const.EXIT_VALIDATION)
        self.assertTrue(any("part 2" in line for line in logs.output))

    def test_missing_input_exit_code(self):
        """输入文件不存在时以校验错误退出"""
        code = self.run_verb("landscape", self.tmp_path("ls"), "--set", "history_path=" + self.tmp_path("absent.csv"))
        self.assertEqual(code, const.EXIT_VALIDATION)

    def test_bad_overrides(self):
        """--set格式错误或配置项未知时以校验错误退出"""
        self.assertEqual(self.run_verb("simulate", self.tmp_path("x"), "--set", "sim_days"), const.EXIT_VALIDATION)
        self.assertEqual(self.run_verb("simulate", self.tmp_path("x"), "--set", "no_such_key=1"), const.EXIT_VALIDATION)

    def test_unreachable_targets_exit_code(self):
        """目标次数无法达到时以天数上限退出"""
        code = self.run_verb("simulate", self.tmp_path("cap"), "--set", "sim_target_counts=[100000, 1]", "--set", "sim_days=10")
        self.assertEqual(code, const.EXIT_RUNTIME_CAP)


if __name__ == "__main__":
    unittest.main()
