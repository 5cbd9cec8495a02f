from command.command import Command
from command.run_config import RunConfig
from common import const
from common.log import logger
from solver.lp_writer import export_lp


class ExportLPCommand(Command):
    name = const.EXPORT_LP

    def run(self, rc: RunConfig) -> int:
        lp = export_lp(rc.rates(), rc.costs, rc.limits, rc.out().path("model.lp"), rc.header)
        logger.info("[CMD] wrote LP with {} variables and {} constraints".format(len(lp.variables), len(lp.constraints)))
        return const.EXIT_OK
