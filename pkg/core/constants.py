"""Application constants"""

# CLI exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_GENERICITY_ERROR = 3

# Stratum status labels
STRATUM_TORUS = "torus"
STRATUM_EMPTY_CONSTANT = "empty: constant equation"
STRATUM_EMPTY_OVERDETERMINED = "empty: more equations than variables"
STRATUM_EMPTY_MONOMIAL = "empty: monomial equation"

# Numeric report reasons
ERROR_DEGENERATE_FUNCTIONAL = "Degenerate functional"
ERROR_ROOT_CLUSTER = "Root cluster below separation threshold"
ERROR_RESULTANT_VANISHES = "Resultant identically zero"
ERROR_RESIDUAL = "Residual above tolerance"

# Parser limits
MAX_ABS_EXPONENT = 10**6
