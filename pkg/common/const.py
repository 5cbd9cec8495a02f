VERSION = "0.3.0"
TOOLKIT = "wear-replace"

# command verbs
SIMULATE = "simulate"
ESTIMATE = "estimate"
SOLVE = "solve"
LANDSCAPE = "landscape"
EVALUATE = "evaluate"
EXPORT_LP = "export-lp"
VERBS = [SIMULATE, ESTIMATE, SOLVE, LANDSCAPE, EVALUATE, EXPORT_LP]

# exit codes
EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_VALIDATION = 2
EXIT_STRUCTURE = 3
EXIT_RUNTIME_CAP = 4

# wear model defaults (0.01 mm units)
DEFAULT_BIN_WIDTH = 9
DEFAULT_BIN_COUNT = 10
DEFAULT_RATE_MAX = 20
DEFAULT_FRESH_WEAR = 1

# simulator
SAFETY_CAP_FACTOR = 10  # day cap = factor * history horizon

# value iteration
MAX_SWEEPS = 1000000
TOL_SCALE = 1e-8

# annealing
NEIGHBOR_RETRIES = 32

# policy heatmap colours, indexed by action code
ACTION_COLORS = [
    (0, 0, 255),  # proceed: blue
    (255, 0, 0),  # replace part 1: red
    (0, 160, 0),  # replace part 2: green
    (128, 0, 128),  # replace both: purple
]
