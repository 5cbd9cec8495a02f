from command.command import Command
from command.run_config import RunConfig
from common import const
from landscape.report import analyze, write_report


class LandscapeCommand(Command):
    name = const.LANDSCAPE

    def run(self, rc: RunConfig) -> int:
        history = rc.history()
        report, series = analyze(
            history,
            rc.limits,
            population=int(rc.settings["landscape_population"]),
            starts=int(rc.settings["landscape_starts"]),
            walk_steps=int(rc.settings["landscape_walk_steps"]),
            seed=rc.seed,
            shape=rc.shape,
            bin_width=rc.bin_width,
            rate_max=rc.rate_max,
            workers=rc.workers,
        )
        out = rc.out()
        write_report(report, series, out.path("landscape.txt"), out.path("walk.csv"), rc.header)
        return const.EXIT_OK
