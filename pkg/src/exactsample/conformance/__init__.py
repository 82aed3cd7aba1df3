"""Conformance harness: statistical checks, exact tape enumeration, the named suite."""

from exactsample.conformance.checks import (
    approx_closure_check,
    cdf_check,
    chi_square_check,
    ks_check,
    laplace_accuracy_check,
    rate_check,
)
from exactsample.conformance.enumerate import enumerate_exact
from exactsample.conformance.report import CdfCheckSpec, ConformanceReport, MassBracket

__all__ = [
    "CdfCheckSpec",
    "ConformanceReport",
    "MassBracket",
    "approx_closure_check",
    "cdf_check",
    "chi_square_check",
    "enumerate_exact",
    "ks_check",
    "laplace_accuracy_check",
    "rate_check",
]
