"""Supercongruence verification toolkit (Python bindings)."""

from ._core import (
    ScvError,
    admissible_primes,
    analytic_suite,
    ap_form,
    ap_form_direct,
    check_example,
    eta_ap_oracle,
    exact_trunc_F,
    example_ids,
    hensel_sqrt,
    legendre,
    run_sweep,
    sweep_report,
    trace_of_frobenius,
    trunc_F,
    unit_root,
)

__all__ = [
    "ScvError",
    "admissible_primes",
    "analytic_suite",
    "ap_form",
    "ap_form_direct",
    "check_example",
    "eta_ap_oracle",
    "exact_trunc_F",
    "example_ids",
    "hensel_sqrt",
    "legendre",
    "run_sweep",
    "sweep_report",
    "trace_of_frobenius",
    "trunc_F",
    "unit_root",
]
