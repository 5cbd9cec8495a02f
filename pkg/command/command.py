"""
Toolkit command abstract class
"""

from command.run_config import RunConfig


class Command(object):
    name = ""

    def run(self, rc: RunConfig) -> int:
        """
        run the command and write its artifacts
        :param rc: effective run configuration
        :return: process exit code
        """
        raise NotImplementedError
