import os
import pathlib


class OutputDir(object):
    """The directory a command writes its artifacts into; created on first use."""

    def __init__(self, root="./output"):
        self.root = pathlib.Path(root)
        if not os.path.exists(self.root):
            os.makedirs(self.root)

    def path(self, name=""):
        return str(self.root / name)
