from evaluation.cost_report import (
    CostReport,
    ScenarioComparison,
    compare,
    cycle_average_cost,
    historical_cost,
    policy_cost,
    read_comparison,
    write_comparison,
)
