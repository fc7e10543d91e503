# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Toolkit literals."""

TOOL_NAME = "transversal-lab"
TOOL_VERSION = "0.1.0"

# Environment overrides.
NODE_BUDGET_ENV = "TRANSVERSAL_LAB_NODE_BUDGET"
LOG_LEVEL_ENV = "TRANSVERSAL_LAB_LOG_LEVEL"
JOBS_ENV = "TRANSVERSAL_LAB_JOBS"

LOG_LEVELS = ("debug", "info", "warning", "error", "critical")
DEFAULT_LOG_LEVEL = "info"
DEFAULT_JOBS = 1

# Solver limits.
DEFAULT_NODE_BUDGET = 10**8
BRUTEFORCE_MAX_N = 24

# Recognition and enumeration caps.
RECOGNITION_MAX_N = 16
RECOGNITION_MEMO_MAX = 200_000
LEMMA5_EXHAUSTIVE_TRIPLES_MAX_N = 8
LEMMA5_TRIPLE_SAMPLES = 10_000
LEMMA5_SAMPLE_SEED = 5

# Edge weights in the potential; keyed by edge size.
EDGE_WEIGHTS = {2: 10, 3: 6, 4: 4}
VERTEX_WEIGHT = 6
B_WEIGHT = 2
B1_WEIGHT = 1

# Class H: edge sizes and degree cap of the main inequality.
CLASS_H_EDGE_SIZES = frozenset({2, 3, 4})
CLASS_H_MAX_DEGREE = 3

# Total domination pipeline.
SHRINK_SIZE = 4
PEEL_THRESHOLD = 4
MIN_DEGREE_3N7 = 4

# CLI exit codes.
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3

# Files.
HYPERGRAPH_SUFFIX = ".hg"
CERTIFICATE_SUFFIX = ".cert"
PROGRESS_EVERY = 100
