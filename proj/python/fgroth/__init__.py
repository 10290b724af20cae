"""Flagged skew Grothendieck polynomials.

Three independent computations: the Jacobi-Trudi determinant, evaluation of
the free-fermion vacuum expectation value, and set-valued tableau sums.
"""

import json

from ._fgroth import (
    Instance,
    InvariantViolation,
    Poly,
    UsageError,
    WindowError,
    compute,
    fermionic,
    g_coefficient,
    g_n_fermionic,
    inversion_sets,
    is_vexillary,
    jt_determinant,
    run_cli,
    shape_and_flag,
    ssyt_polynomial,
    tableaux_polynomial,
)
from ._fgroth import compare_json as _compare_json


def compare(inst, check_stability=True, threads=1, deterministic=True):
    """Run every applicable method on `inst` and return the report as a dict."""
    return json.loads(_compare_json(inst, check_stability, threads, deterministic))


__all__ = [
    "Instance",
    "InvariantViolation",
    "Poly",
    "UsageError",
    "WindowError",
    "compare",
    "compute",
    "fermionic",
    "g_coefficient",
    "g_n_fermionic",
    "inversion_sets",
    "is_vexillary",
    "jt_determinant",
    "run_cli",
    "shape_and_flag",
    "ssyt_polynomial",
    "tableaux_polynomial",
]
