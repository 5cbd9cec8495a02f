from landscape.indices import (
    CachedObjective,
    amplitude,
    autocorrelation_r1,
    lag1_autocorrelation,
    mean_walk_length,
    random_walk,
    sample_population,
    walk_length,
)
from landscape.report import LandscapeReport, analyze, read_walk, write_report
