"""Exact verification engine for q-deformed quaternions and su(2) instantons."""

import json
from fractions import Fraction

from ._qhopf import QhopfError, confluence, nf, resolve_k, suites
from ._qhopf import eval_rational as _eval_rational
from ._qhopf import verify_json as _verify_json

__all__ = ["QhopfError", "confluence", "eval", "nf", "resolve_k", "suites", "verify"]


def _rat(x):
    return None if x is None else str(Fraction(x))


def eval(expr, q, u=None, p=None, variant="standard"):
    """Exact value of a coefficient expression at rational q (and u = |x|^2, p = rho^2)."""
    return Fraction(_eval_rational(expr, _rat(q), _rat(u), _rat(p), variant))


def verify(suite_names, variant="standard", n=2, q_numeric=None, jobs=1):
    """Run suites and return the report as a dict (same schema as the CLI, without timing)."""
    if isinstance(suite_names, str):
        suite_names = [suite_names]
    return json.loads(_verify_json(list(suite_names), variant, n, _rat(q_numeric), jobs, False))
