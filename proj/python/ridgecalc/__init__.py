"""Exact ridge-function decomposition over multiquadratic fields.

Problems are accepted as dicts (or JSON text) in the same format as the
command line tool.
"""

import json

from ._core import (
    DivisionByZero,
    Field,
    GeometryError,
    InfeasibleError,
    KNumber,
    ParseError,
    PreconditionError,
    UsageError,
    run_cli,
)
from . import _core

__all__ = [
    "DivisionByZero",
    "Field",
    "GeometryError",
    "InfeasibleError",
    "KNumber",
    "ParseError",
    "PreconditionError",
    "UsageError",
    "extract",
    "float_check",
    "run_cli",
    "smooth",
]


def _text(problem):
    return problem if isinstance(problem, str) else json.dumps(problem)


def extract(problem, target, steps, at="0"):
    """Component difference of term `target` (0-based) at `at`."""
    return _core.extract(_text(problem), target, [str(h) for h in steps], str(at))


def smooth(problem, samples=50, seed=0):
    """Solution dict with keys g, P, certificate and problem."""
    return json.loads(_core.smooth(_text(problem), samples, seed))


def float_check(problem, target, steps, tol=1e-8):
    return _core.float_check(_text(problem), target, [str(h) for h in steps], tol)
