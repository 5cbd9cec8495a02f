"""
command factory
"""
from common import const


def create_command(verb):
    """
    create a command instance
    :param verb: cli verb
    :return: command instance
    """
    if verb == const.SIMULATE:
        from command.simulate_command import SimulateCommand
        return SimulateCommand()

    elif verb == const.ESTIMATE:
        from command.estimate_command import EstimateCommand
        return EstimateCommand()

    elif verb == const.SOLVE:
        from command.solve_command import SolveCommand
        return SolveCommand()

    elif verb == const.LANDSCAPE:
        from command.landscape_command import LandscapeCommand
        return LandscapeCommand()

    elif verb == const.EVALUATE:
        from command.evaluate_command import EvaluateCommand
        return EvaluateCommand()

    elif verb == const.EXPORT_LP:
        from command.export_lp_command import ExportLPCommand
        return ExportLPCommand()

    raise RuntimeError("unknown verb {}".format(verb))
