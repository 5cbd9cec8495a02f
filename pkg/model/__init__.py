from model.cost_model import CostModel, Limits
from model.failure_history import FailureEvent, FailureHistory, Part, read_history, write_history
from model.rate_table import RateTable, rate_lookup, read_rate_table, write_rate_table
from model.wear_state import WearState, bin_index
