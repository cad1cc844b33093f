"""Arithmetic substrate: field backends, matrices, polynomials, determinants, roots."""
from .backends import (
    BACKENDS,
    COMPLEX,
    DEFAULT_TOL,
    RATIONAL,
    ComplexConjugate,
    FieldBackend,
    RationalIdentity,
    apply_f,
    g_of,
    get_backend,
    sqrt_g,
)
from .linalg import char_poly, det, det_leibniz
from .matrix import GainMatrix
from .polynomial import Polynomial
from .roots import poly_roots

__all__ = [
    "BACKENDS", "COMPLEX", "DEFAULT_TOL", "RATIONAL", "ComplexConjugate", "FieldBackend",
    "RationalIdentity", "apply_f", "g_of", "get_backend", "sqrt_g", "char_poly", "det",
    "det_leibniz", "GainMatrix", "Polynomial", "poly_roots",
]
