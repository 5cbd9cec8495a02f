from command.command import Command
from command.run_config import RunConfig
from common import const
from common.log import logger
from model.failure_history import write_history
from simulation.wear_simulator import simulate_limit_policy, write_trajectory


class SimulateCommand(Command):
    name = const.SIMULATE

    def run(self, rc: RunConfig) -> int:
        rates = rc.rates()
        targets = rc.settings.get("sim_target_counts")
        days = rc.settings.get("sim_days")
        outcome = simulate_limit_policy(
            rates,
            rc.limits,
            max_days=None if days is None else int(days),
            target_counts=tuple(int(x) for x in targets) if targets else None,
            record_trajectory=bool(rc.settings.get("sim_trajectory")),
        )
        out = rc.out()
        write_history(outcome.history, out.path("events.csv"), rc.header)
        if outcome.trajectory is not None:
            write_trajectory(outcome, out.path("trajectory.csv"), rc.header)
        logger.info("[CMD] simulated {} days, {} events, counts {}".format(outcome.days, len(outcome.history), outcome.history.counts))
        return const.EXIT_OK
