from command.command import Command
from command.run_config import RunConfig
from common import const
from common.errors import StructureViolation
from common.log import logger
from common.utils import write_text
from solver.bellman import Action, count_actions, default_tol, extract_policy, value_iteration
from solver.grid_io import write_heatmap, write_policy_grid, write_thresholds, write_value_grid
from solver.lp_writer import export_lp
from solver.structure import check_structure, thresholds


class SolveCommand(Command):
    name = const.SOLVE

    def run(self, rc: RunConfig) -> int:
        rates = rc.rates()
        tol = rc.tol if rc.tol is not None else default_tol(rc.costs)
        vf, sweeps = value_iteration(rates, rc.costs, rc.limits, tol)
        policy = extract_policy(vf, rates, rc.costs, rc.limits)

        out = rc.out()
        write_value_grid(vf, out.path("value.csv"), rc.header)
        write_policy_grid(policy, out.path("policy.csv"), rc.header)
        write_heatmap(policy, out.path("policy.ppm"), rc.header)
        if rc.settings.get("export_lp"):
            export_lp(rates, rc.costs, rc.limits, out.path("model.lp"), rc.header)

        report = check_structure(vf, policy, tol, rc.limits.fresh_wear)
        text = "sweeps={}\n".format(sweeps) + report.to_text()
        status = const.EXIT_OK if report.passed else const.EXIT_STRUCTURE
        try:
            write_thresholds(thresholds(policy), out.path("thresholds.csv"), rc.header)
        except StructureViolation as e:
            text += "thresholds=undefined {}\n".format(e)
            status = const.EXIT_STRUCTURE
        write_text(out.path("structure.txt"), text, header=rc.header)

        counts = count_actions(policy)
        logger.info("[CMD] solved in {} sweeps; actions {}".format(sweeps, {a.name.lower(): counts[a] for a in Action}))
        if status != const.EXIT_OK:
            logger.error("[CMD] structure check failed: {}".format(report.first() or "thresholds undefined"))
        return status
