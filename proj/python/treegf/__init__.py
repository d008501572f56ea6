"""Exact generating functions, censuses and limit probabilities for
Schroeder and Motzkin trees, backed by the C++ core."""

from ._core import (
    asymptotic_estimate,
    balanced_census,
    balanced_root_gf,
    balanced_series,
    context_series,
    dominant_singularity,
    enumerate_count,
    finite_probability,
    limit_balanced_probability,
    limit_subtree_probability,
    monte_carlo_census,
    motzkin_context_series,
    motzkin_limit_probability,
    motzkin_series,
    motzkin_subtree_series,
    rk_coefficients,
    rk_polynomial,
    run_cli,
    schroeder_series,
    subtree_census,
    subtree_series,
    tightness_partial_sum,
    verify,
    vertex_series,
)

__all__ = [
    "asymptotic_estimate",
    "balanced_census",
    "balanced_root_gf",
    "balanced_series",
    "context_series",
    "dominant_singularity",
    "enumerate_count",
    "finite_probability",
    "limit_balanced_probability",
    "limit_subtree_probability",
    "monte_carlo_census",
    "motzkin_context_series",
    "motzkin_limit_probability",
    "motzkin_series",
    "motzkin_subtree_series",
    "rk_coefficients",
    "rk_polynomial",
    "run_cli",
    "schroeder_series",
    "subtree_census",
    "subtree_series",
    "tightness_partial_sum",
    "verify",
    "vertex_series",
]

__version__ = "0.1.0"
