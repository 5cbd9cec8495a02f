from estimator.annealer import SARun, TempDiagnostics, TraceRow, anneal, initial_solution, initial_temperature, temperature_from_samples
from estimator.report import MonotoneReport, monotone_diagnostic, read_summary, read_trace, write_summary, write_trace
from estimator.restarts import GridCell, anneal_many, sensitivity_grid, summarize
from estimator.sa_config import SAConfig
from estimator.search_space import moves, neighbor, random_move, random_table
