"""Gelfand-Tsetlin-Zhelobenko bases for o(2n+1) | o(2n-1), checked in exact arithmetic."""

from gtzlab.kernel import DegreeBound, KernelResult, NotStabilized, solve_kernel, weight_multiset
from gtzlab.ops import DerivationOp, EulerOp, NotEigenvector, apply, apply_power, euler_eigenvalue
from gtzlab.ring import Kind, Poly, VarId, rank_of_span, substitute, zvar
from gtzlab.systems import (ExponentTuple, HighestWeight, IndicatorSystem, InvalidWeight,
                            build_indicator_a, build_indicator_b)
from gtzlab.tableaux import enumerate_b_tableaux, enumerate_gl_tableaux, weyl_dim

__version__ = "0.1.0"

__all__ = [
    "DegreeBound", "DerivationOp", "EulerOp", "ExponentTuple", "HighestWeight", "IndicatorSystem",
    "InvalidWeight", "Kind", "KernelResult", "NotEigenvector", "NotStabilized", "Poly", "VarId",
    "apply", "apply_power", "build_indicator_a", "build_indicator_b", "enumerate_b_tableaux",
    "enumerate_gl_tableaux", "euler_eigenvalue", "rank_of_span", "solve_kernel", "substitute",
    "weight_multiset", "weyl_dim", "zvar",
]
