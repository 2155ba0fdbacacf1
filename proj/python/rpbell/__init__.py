"""Exact restricted Stirling numbers, Bell polynomials, and identity checks.

All values are exact: integers come back as Python ints, rationals as
fractions.Fraction. Restriction vectors are lists of positive part sizes,
e.g. [2, 2] for two separated pairs.
"""

from rpbell._rpbell import (
    a_coeffs,
    bell_coefficients,
    bell_tilde_coefficients,
    bell_value,
    certify_real_negative_roots,
    check_newton_inequality,
    check_strong_log_concavity,
    count_partitions,
    enumerate_partitions,
    max_index_report,
    poly_p_coefficients,
    r_bell_number,
    r_stirling1_unsigned,
    r_stirling2,
    rp_stirling2,
    rp_stirling2_via_reduction,
    run_suite,
    stirling1_unsigned,
    stirling2,
    suite_names,
    verify_dobinski,
)

__all__ = [
    "a_coeffs",
    "bell_coefficients",
    "bell_tilde_coefficients",
    "bell_value",
    "certify_real_negative_roots",
    "check_newton_inequality",
    "check_strong_log_concavity",
    "count_partitions",
    "enumerate_partitions",
    "max_index_report",
    "poly_p_coefficients",
    "r_bell_number",
    "r_stirling1_unsigned",
    "r_stirling2",
    "rp_stirling2",
    "rp_stirling2_via_reduction",
    "run_suite",
    "stirling1_unsigned",
    "stirling2",
    "suite_names",
    "verify_dobinski",
]

__version__ = "0.1.0"
