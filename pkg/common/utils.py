import hashlib
import io
import json
import os

import pandas as pd

from common import const


def config_hash(settings: dict) -> str:
    canonical = json.dumps(settings, sort_keys=True, ensure_ascii=False, default=str)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:12]


def provenance_header(cfg_hash: str = "", seed=None) -> str:
    """Single comment line stamped on every artifact; no timestamps, so reruns stay byte-identical."""
    return "# {} {} config={} seed={}".format(const.TOOLKIT, const.VERSION, cfg_hash or "-", "-" if seed is None else seed)


def ensure_parent(path):
    parent = os.path.dirname(os.path.abspath(path))
    if not os.path.exists(parent):
        os.makedirs(parent)


def write_text(path, text: str, header: str = None, comment: str = "#"):
    ensure_parent(path)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        if header:
            if comment != "#":
                header = comment + header.lstrip("#")
            f.write(header + "\n")
        f.write(text)


def write_csv(df: pd.DataFrame, path, header: str = None, index=False):
    buf = io.StringIO()
    df.to_csv(buf, index=index, lineterminator="\n")
    write_text(path, buf.getvalue(), header=header)


def leading_comment_lines(path) -> int:
    n = 0
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            if not line.startswith("#"):
                break
            n += 1
    return n


def read_csv(path, **kwargs) -> pd.DataFrame:
    kwargs.setdefault("float_precision", "round_trip")
    return pd.read_csv(path, comment="#", skipinitialspace=True, **kwargs)
