"""
Defaults for the quantum edge-detection toolkit.

The run-time values (threshold, aggregation, format, workers, learning rate,
iterations) are also exposed as command-line flags. Nothing is read from the
environment.
"""

import os

BASE_DIR = os.path.dirname(os.path.abspath(__file__))

# Boundary detection
# A difference coefficient counts as a boundary when |value| > DEFAULT_EPSILON.
DEFAULT_EPSILON = 1e-9
DEFAULT_DROP_WRAPAROUND = True   # mask column/slab/padding seams and c_{P-1} - c_0
DEFAULT_AGGREGATION = "none"     # average | mode-most | mode-least | max | min | none
DEFAULT_RESCALE_BY_NORM = False
DEFAULT_OUTPUT_FORMAT = "json"   # json | csv

# Simulation limits
# 2^24 complex128 amplitudes is 256 MiB
MAX_SIMULATED_QUBITS = 24
MIN_GHZ_QUBITS = 2

# Numerical tolerances
UNIT_NORM_TOLERANCE = 1e-9
STATE_TOLERANCE = 1e-12
UNITARY_TOLERANCE = 1e-12

# Frame fan-out for time series
FRAME_WORKERS = 4

# Linear regression (gradient descent)
DEFAULT_LEARNING_RATE = 0.01
DEFAULT_ITERATIONS = 10000
DIVERGENCE_PATIENCE = 10  # consecutive cost increases before giving up

# Reports
REPORT_FLOAT_FORMAT = "%.17g"

# Logging
LOG_PATH = os.path.join(BASE_DIR, "logs", "quantum_edges.log")
LOG_MAX_BYTES = 5 * 1024 * 1024
LOG_BACKUP_COUNT = 3
