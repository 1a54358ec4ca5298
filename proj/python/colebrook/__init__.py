"""Explicit approximations of the Colebrook friction factor."""

from ._colebrook import (
    ConfigError,
    DomainError,
    IoError,
    NonConvergenceError,
    colebrook_rhs,
    cost_profile,
    evaluate_scheme,
    kernel_sweep,
    pade_ln,
    pade_sin,
    quintic_sin,
    scan,
    scheme_ids,
    sobol_2d,
    solve,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "IoError",
    "NonConvergenceError",
    "colebrook_rhs",
    "cost_profile",
    "evaluate_scheme",
    "kernel_sweep",
    "pade_ln",
    "pade_sin",
    "quintic_sin",
    "scan",
    "scheme_ids",
    "sobol_2d",
    "solve",
]
