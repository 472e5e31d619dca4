"""Exact big Witt vector arithmetic and motivic measures of curves over finite fields."""

from .curves import (
    CurveDescriptor,
    ZetaData,
    base_change,
    count_points,
    curve_zeta,
    motivic_measure,
    restrict_scalars,
    zeta_from_counts,
    zeta_from_numerator,
)
from .errors import BudgetExceeded, Inconclusive, InvalidInputError, PrecisionError
from .ff import FieldSpec, field_make
from .jacobi import (
    GroupLaurentPoly,
    IndependenceVerdict,
    MonomialEigenvalue,
    char_from_eigenvalues,
    independence_witness,
    lattice_dims,
)
from .rational import MotivicMeasurePoly, OnePoly, WittRational, poly_frobenius, poly_witt_mul
from .skolem import GoodSet, classify_two_curves, ghost_zero_set, localize_irreducible_relation
from .witt import LambdaSeries, frobenius, ghost, ghost_inverse, lambda_add, lambda_mul, verschiebung
from .zerodim import SElement, psi, s_mul

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CurveDescriptor",
    "FieldSpec",
    "GoodSet",
    "GroupLaurentPoly",
    "Inconclusive",
    "IndependenceVerdict",
    "InvalidInputError",
    "LambdaSeries",
    "MonomialEigenvalue",
    "MotivicMeasurePoly",
    "OnePoly",
    "PrecisionError",
    "SElement",
    "WittRational",
    "ZetaData",
    "base_change",
    "char_from_eigenvalues",
    "classify_two_curves",
    "count_points",
    "curve_zeta",
    "field_make",
    "frobenius",
    "ghost",
    "ghost_inverse",
    "ghost_zero_set",
    "independence_witness",
    "lambda_add",
    "lambda_mul",
    "lattice_dims",
    "localize_irreducible_relation",
    "motivic_measure",
    "poly_frobenius",
    "poly_witt_mul",
    "psi",
    "restrict_scalars",
    "s_mul",
    "verschiebung",
    "zeta_from_counts",
    "zeta_from_numerator",
]
