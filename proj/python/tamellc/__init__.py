"""Python access to the tamellc exact checks.

Reports are returned as decoded JSON with the same layout as the CLI output.
"""

import json

from . import _tamellc
from ._tamellc import TameLLCError, dim_delta, formal_degree, root_number, run_criterion

__all__ = [
    "TameLLCError",
    "dim_delta",
    "error_kind",
    "factors",
    "formal_degree",
    "report",
    "root_number",
    "run_criterion",
    "sweep",
]
__version__ = _tamellc.__version__


def error_kind(exc):
    """Kind name of a TameLLCError, e.g. 'InvalidParams'."""
    return str(exc).split(":", 1)[0]


def report(q, e, f, m, r, root_number=True):
    return json.loads(_tamellc.report_json(q, e, f, m, r, root_number))


def factors(q, e, f, m, r):
    return json.loads(_tamellc.factors_json(q, e, f, m, r))


def sweep(qs, max_n=4, r=(2, 4), root_number=True, jobs=0):
    return json.loads(_tamellc.sweep_json(list(qs), max_n, r[0], r[1], root_number, jobs))
