"""CSV and image artifacts of a solved grid."""

import os

import numpy as np
import pandas as pd
from PIL import Image

from common import const
from common.errors import ParseError
from common.utils import ensure_parent, read_csv, write_csv, write_text
from solver.bellman import Action, PolicyGrid, ValueFunction, count_actions
from solver.structure import Thresholds

GRID_INDEX = "d1\\d2"


def _grid_frame(values: np.ndarray) -> pd.DataFrame:
    df = pd.DataFrame(values, index=range(values.shape[0]), columns=range(values.shape[1]))
    df.index.name = GRID_INDEX
    return df


def _read_grid(path, dtype) -> np.ndarray:
    try:
        df = read_csv(path, index_col=0)
        values = df.to_numpy(dtype=dtype)
    except (ValueError, pd.errors.ParserError) as e:
        raise ParseError(path, 1, "malformed grid: {}".format(e))
    if list(df.index) != list(range(len(df.index))) or [int(c) for c in df.columns] != list(range(len(df.columns))):
        raise ParseError(path, 1, "grid labels must run 0..n along both axes")
    return values


def write_value_grid(vf: ValueFunction, path, header: str = None):
    write_csv(_grid_frame(np.asarray(vf.u, dtype=float)), path, header=header, index=True)


def read_value_grid(path) -> ValueFunction:
    return ValueFunction(_read_grid(path, float))


def write_policy_grid(policy: PolicyGrid, path, header: str = None):
    write_csv(_grid_frame(np.asarray(policy.action, dtype=int)), path, header=header, index=True)


def read_policy_grid(path) -> PolicyGrid:
    action = _read_grid(path, int)
    if action.size and (action.min() < 0 or action.max() > 3):
        raise ParseError(path, 1, "action codes must lie in 0..3")
    return PolicyGrid(action.astype(np.int8))


def write_thresholds(th: Thresholds, path, header: str = None):
    rows = [("1", d2, i, kind) for d2, (i, kind) in enumerate(zip(th.i_star, th.i_kind))]
    rows += [("2", d1, j, kind) for d1, (j, kind) in enumerate(zip(th.j_star, th.j_kind))]
    write_csv(pd.DataFrame(rows, columns=["part", "other_wear", "threshold", "kind"]), path, header=header)


def read_thresholds(path) -> Thresholds:
    df = read_csv(path, dtype={"part": str, "other_wear": int, "threshold": int, "kind": str})
    part1 = df[df["part"] == "1"].sort_values("other_wear")
    part2 = df[df["part"] == "2"].sort_values("other_wear")
    return Thresholds(
        tuple(int(x) for x in part1["threshold"]),
        tuple(part1["kind"]),
        tuple(int(x) for x in part2["threshold"]),
        tuple(part2["kind"]),
    )


def legend_path(image_path) -> str:
    return os.path.splitext(image_path)[0] + ".legend.txt"


def write_heatmap(policy: PolicyGrid, path, header: str = None):
    """One pixel per state: d1 to the right, d2 upward, origin at the bottom-left corner."""
    action = np.asarray(policy.action, dtype=np.int64)
    palette = np.array(const.ACTION_COLORS, dtype=np.uint8)
    pixels = palette[action.T[::-1, :]]
    ensure_parent(path)
    Image.fromarray(np.ascontiguousarray(pixels)).save(path, format="PPM")

    counts = count_actions(policy)
    lines = ["image={}".format(os.path.basename(path)), "width={} (d1 = 0..{})".format(action.shape[0], action.shape[0] - 1)]
    lines.append("height={} (d2 = {}..0 top to bottom)".format(action.shape[1], action.shape[1] - 1))
    for a in Action:
        r, g, b = const.ACTION_COLORS[a]
        lines.append("{}={} rgb({},{},{}) cells={}".format(int(a), a.name.lower(), r, g, b, counts[a]))
    write_text(legend_path(path), "\n".join(lines) + "\n", header=header)
