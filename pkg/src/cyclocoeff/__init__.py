"""Exact coefficients of cyclotomic and inverse cyclotomic polynomials.

Ternary coefficients go through Kaplan's formula, full expansions through a
truncated Moebius product. Hot loops live in a compiled extension with a
numpy fallback, see ``cyclocoeff._backend``.
"""
from ._backend import BACKEND
from .kaplan import make_kaplan_context, ternary_coeff
from .polys import cyclotomic_poly, inverse_cyclotomic_poly
from .properties import check_jump_one, coeff_set

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "check_jump_one",
    "coeff_set",
    "cyclotomic_poly",
    "inverse_cyclotomic_poly",
    "make_kaplan_context",
    "ternary_coeff",
]
