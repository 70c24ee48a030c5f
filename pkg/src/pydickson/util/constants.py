####
## Field
####

DEFAULT_Q_BOUND = 512
# Exp/log tables up to MUL_TABLE_MAX_ORDER, addition tables up to ADD_TABLE_MAX_ORDER
MUL_TABLE_MAX_ORDER = 1024
ADD_TABLE_MAX_ORDER = 256
FIELD_SPOT_CHECKS = 8
FIELD_SPOT_CHECK_SEED = 0

####
## Sweep
####

DEFAULT_JOBS = 1
CHUNKS_PER_WORKER = 4

####
## Verification
####

LUCAS_CHECK_MIN_M = 64
EXHAUSTIVE_CUBE_MAX_Q = 16
CUBE_SAMPLE_SIZE = 10_000
EVALUATOR_MAX_N = 500
NOTES_III_MIN_Q = 5

####
## Reporting
####

CSV_COLUMNS = [
    "q",
    "n",
    "u",
    "v",
    "u_prime",
    "v_prime",
    "cube_sum",
    "filter_verdict",
    "is_permutation",
]
SUM_COLUMNS = ["q", "n", "u", "v", "u_prime", "v_prime", "closed", "oracle", "match"]
VERIFY_COLUMNS = ["suite", "q", "cases", "failures"]

####
## Exit codes
####

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
