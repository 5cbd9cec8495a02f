from solver.bellman import (
    Action,
    PolicyGrid,
    Transitions,
    ValueFunction,
    bellman_backup,
    count_actions,
    default_tol,
    extract_policy,
    replace_at_limit_policy,
    value_iteration,
)
from solver.grid_io import read_policy_grid, read_thresholds, read_value_grid, write_heatmap, write_policy_grid, write_thresholds, write_value_grid
from solver.lp_writer import LinearProgram, build_lp, export_lp, read_lp, write_lp
from solver.structure import StructureReport, Thresholds, check_structure, require_structure, thresholds
