"""Finite-field hypergeometric functions nGn over F_q via the p-adic gamma function."""

import json

from ._hypfq import (
    Field,
    check_ids,
    complex_gauss_sum,
    count_dsurface,
    default_precision,
    ec_count,
    gn,
    hessian_count,
)
from ._hypfq import verify_report as _verify_report

__all__ = [
    "Field",
    "check_ids",
    "complex_gauss_sum",
    "count_dsurface",
    "default_precision",
    "ec_count",
    "gn",
    "hessian_count",
    "verify",
]


def verify(suites="all", *, pmax=13, rmax=2, dmax=6, fields=(), precision=-1, threads=1, format="json"):
    """Run verification checks; returns the parsed report for json, text otherwise.

    ``fields`` is a sequence of (p, r) pairs and overrides pmax/rmax.
    """
    if isinstance(suites, str):
        suites = [s.strip() for s in suites.split(",") if s.strip()]
    out = _verify_report(list(suites), pmax, rmax, dmax, [tuple(f) for f in fields], precision, threads, format)
    return json.loads(out) if format == "json" else out
