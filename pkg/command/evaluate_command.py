from command.command import Command
from command.run_config import RunConfig
from common import const
from common.log import logger
from evaluation.cost_report import ScenarioComparison, compare, historical_cost, policy_cost, write_comparison
from solver.bellman import default_tol, extract_policy, value_iteration
from solver.grid_io import read_policy_grid


class EvaluateCommand(Command):
    name = const.EVALUATE

    def run(self, rc: RunConfig) -> int:
        history = rc.history()
        rates = rc.rates()
        horizon = int(rc.settings["eval_horizon"])
        fixed = None
        if rc.policy_path:
            rc.require(rc.policy_path)
            fixed = read_policy_grid(rc.policy_path)

        rows = []
        for scenario in rc.scenarios():
            policy = fixed
            if policy is None:
                tol = rc.tol if rc.tol is not None else default_tol(scenario.costs)
                vf, _ = value_iteration(rates, scenario.costs, rc.limits, tol)
                policy = extract_policy(vf, rates, scenario.costs, rc.limits)
            hist = historical_cost(history, scenario.costs)
            run = policy_cost(policy, rates, scenario.costs, rc.limits, horizon)
            reduction = compare(run, hist)
            logger.info("[EVAL] {}: historical {:.4f}/day, policy {:.4f}/day, reduction {:.2f}%".format(scenario.name, hist.mean_cost_per_day, run.mean_cost_per_day, reduction))
            rows.append(ScenarioComparison(scenario.name, hist.mean_cost_per_day, run.mean_cost_per_day, reduction))
        write_comparison(rows, rc.out().path("comparison.csv"), rc.header)
        return const.EXIT_OK
