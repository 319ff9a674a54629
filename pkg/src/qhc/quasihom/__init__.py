"""Weights, the unique normal form and the type classification of quasi-homogeneous curves."""

from qhc.quasihom.classify import (
    CurveKind,
    CurveType,
    NonReducedError,
    Reduction,
    check_reduced,
    classify_type,
    curve_from_configuration,
    normal_form_from_configuration,
    reduce,
)
from qhc.quasihom.normal_form import (
    CommodeFactorization,
    NonCommodeError,
    NormalForm,
    decompose_monomial_part,
    factor_commode,
    normal_form,
)
from qhc.quasihom.weights import NotQuasiHomogeneousError, Weights, detect_weights, require_weights

__all__ = [
    "CommodeFactorization",
    "CurveKind",
    "CurveType",
    "NonCommodeError",
    "NonReducedError",
    "NormalForm",
    "NotQuasiHomogeneousError",
    "Reduction",
    "Weights",
    "check_reduced",
    "classify_type",
    "curve_from_configuration",
    "decompose_monomial_part",
    "detect_weights",
    "factor_commode",
    "normal_form",
    "normal_form_from_configuration",
    "reduce",
    "require_weights",
]
