from simulation.objective import ObjectiveValue, SSEObjective, sse_objective
from simulation.wear_simulator import SimOutcome, read_trajectory, simulate_limit_policy, step_day, write_trajectory
