"""Kronecker coefficients with a hook shape, and the colored insertion behind them."""

from ._hookkron import (
    ParseError,
    PreconditionError,
    alpha_table,
    blft,
    brgt,
    convert,
    dual_mixed_insert,
    enumerate_cyt,
    kronecker_hook,
    kronecker_oracle,
    mixed_insert,
    neg,
    pi_minus,
    pi_plus,
    schensted,
    symmetry,
    verify,
)


def hook(n, d):
    """The hook (n-d, 1^d)."""
    return [n - d] + [1] * d


__all__ = [
    "ParseError",
    "PreconditionError",
    "alpha_table",
    "blft",
    "brgt",
    "convert",
    "dual_mixed_insert",
    "enumerate_cyt",
    "hook",
    "kronecker_hook",
    "kronecker_oracle",
    "mixed_insert",
    "neg",
    "pi_minus",
    "pi_plus",
    "schensted",
    "symmetry",
    "verify",
]
