from command.command import Command
from command.run_config import RunConfig
from common import const
from common.log import logger
from common.utils import write_text
from estimator.report import monotone_diagnostic, write_summary, write_trace
from estimator.restarts import anneal_many, sensitivity_grid, summarize
from model.rate_table import write_rate_table


class EstimateCommand(Command):
    name = const.ESTIMATE

    def run(self, rc: RunConfig) -> int:
        history = rc.history()
        history.require_both_parts()
        runs = int(rc.settings.get("sa_runs") or 1)
        results = anneal_many(history, rc.limits, rc.sa, runs, rc.workers, rc.shape, rc.bin_width)
        # min keeps the first of equal objectives, i.e. the lowest seed
        best = min(results, key=lambda r: r.best_objective)

        out = rc.out()
        write_rate_table(best.best, out.path("rates_a.csv"), out.path("rates_b.csv"), rc.header)
        write_trace(best, out.path("trace.csv"), rc.header)
        if rc.settings.get("sa_grid"):
            ns = [int(n) for n in rc.settings["sa_grid_ns"]]
            cools = [float(c) for c in rc.settings["sa_grid_cools"]]
            cells = sensitivity_grid(history, rc.limits, rc.sa, ns, cools, runs, rc.workers, rc.shape, rc.bin_width)
        else:
            cells = [summarize(rc.sa, results)]
        write_summary(cells, out.path("summary.csv"), rc.header)

        mono = monotone_diagnostic(best.best)
        lines = [
            "best_objective={}".format(best.best_objective),
            "best_seed={}".format(best.seed),
            "initial_temperature={:.6g}".format(best.initial_temperature),
            "monotone={}".format("yes" if mono.monotone else "no"),
        ]
        if best.diagnostics is not None:
            d = best.diagnostics
            lines.append("temperature_samples=delta_plus:{:.6g} m1:{} m2:{}{}".format(d.delta_plus, d.m1, d.m2, " flat" if d.flat else ""))
        write_text(out.path("estimate.txt"), "\n".join(lines) + "\n", header=rc.header)
        logger.info("[CMD] best objective {} from seed {} over {} runs".format(best.best_objective, best.seed, runs))
        return const.EXIT_OK
