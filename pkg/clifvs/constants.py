"""
Constants and configuration values for clifvs.

This module centralizes limits, tolerances and defaults so that the
algebra, the representation oracle and the command line agree on them.
"""

# ============================================================================
# Algebra Limits
# ============================================================================

# Maximum number of generators p + q accepted by Signature
MAX_GENERATORS = 16

# Maximum number of generators of an ExtendedBasis (dense 2^s x 2^s matrices)
MAX_REP_GENERATORS = 14

# ============================================================================
# Float Tolerances
# ============================================================================

# "K = 0" test in the FVS recursion: |K|_inf <= tol * max(1, |A|_inf^i)
FLOAT_ZERO_TOLERANCE = 1e-12

# Elimination pivots below tol * max|row| are treated as zero
FLOAT_PIVOT_TOLERANCE = 1e-12

# Residual bound for |A A^-1 - 1|_inf relative to |A|_inf |A^-1|_inf
FLOAT_RESIDUAL_TOLERANCE = 1e-9

# ============================================================================
# Command Line Defaults
# ============================================================================

DEFAULT_MODE = "reduced"

DEFAULT_SCALAR = "rational"

MODE_CHOICES = ["full", "bott", "span", "reduced"]

SCALAR_CHOICES = ["rational", "f64"]

# ============================================================================
# Exit Codes
# ============================================================================

EXIT_OK = 0

# Parse errors, usage errors, invalid signatures
EXIT_USAGE = 1

# The multivector has no inverse (c_N = 0)
EXIT_SINGULAR = 2

SINGULAR_MESSAGE = "inverse does not exist: c_N = 0"

# ============================================================================
# HTTP API
# ============================================================================

DEFAULT_API_PORT = 8000

API_VERSION = "1.0.0"
