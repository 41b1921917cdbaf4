"""Hyperbolic polynomials under the spectral order.

Rational inputs may be ints, ``fractions.Fraction`` or "p/q" strings; any
float switches a call to float mode unless ``mode`` is given.
"""

from ._core import (
    HypmajError,
    appell,
    apply_contraction,
    apply_operator,
    check_majorization,
    coefficients,
    decompose,
    deform,
    derivative_roots,
    gaussian,
    hinge_oracle,
    hunt_names,
    is_real_rooted,
    laguerre_ms,
    matching_distance,
    multiplier,
    pencil_at,
    pencil_check,
    real_roots,
    run_hunt,
    run_suite,
    scan_monotonicity,
    shift_pencil,
    suite_names,
    verify_chain,
    witness,
)

__all__ = [
    "HypmajError",
    "appell",
    "apply_contraction",
    "apply_operator",
    "check_majorization",
    "coefficients",
    "decompose",
    "deform",
    "derivative_roots",
    "gaussian",
    "hinge_oracle",
    "hunt_names",
    "is_real_rooted",
    "laguerre_ms",
    "matching_distance",
    "multiplier",
    "pencil_at",
    "pencil_check",
    "real_roots",
    "run_hunt",
    "run_suite",
    "scan_monotonicity",
    "shift_pencil",
    "suite_names",
    "verify_chain",
    "witness",
]
