"""Tangential vector Slepian functions on a spherical cap."""

from ._core import (
    DomainError,
    Solution,
    assemble_J,
    assemble_K,
    degrees_to_radians,
    error_analysis,
    eval_F,
    eval_F_column,
    eval_F_via_U,
    eval_Q,
    eval_U,
    eval_U_column,
    eval_Y,
    gauss_legendre,
    kernel_K,
    partial_shannon,
    run_cli,
    shannon,
    solve_order,
    verify,
)

__all__ = [
    "DomainError",
    "Solution",
    "assemble_J",
    "assemble_K",
    "degrees_to_radians",
    "error_analysis",
    "eval_F",
    "eval_F_column",
    "eval_F_via_U",
    "eval_Q",
    "eval_U",
    "eval_U_column",
    "eval_Y",
    "gauss_legendre",
    "kernel_K",
    "partial_shannon",
    "run_cli",
    "shannon",
    "solve_order",
    "verify",
]
