"""Exact (s,t)-deformed calculus: Fibonomials, sequences and identity checks."""

import json

from ._stcalc import DomainError, Error, UsageError, binom, case_ids, fib, polytopic, run_cli, verify_json

__all__ = [
    "DomainError",
    "Error",
    "UsageError",
    "binom",
    "case_ids",
    "fib",
    "polytopic",
    "run_cli",
    "verify",
    "verify_json",
]


def verify(order=8, seed=42, filter="", threads=0):
    """Run the identity registry and return the report as a dict."""
    return json.loads(verify_json(order, seed, filter, threads))
