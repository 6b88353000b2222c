"""Exact A-polynomials of the twist knots K_n = J(2, 2n)."""

from .apoly import (
    METHODS,
    APoly,
    VerifyReport,
    a_poly_explicit,
    a_poly_resultant,
    a_poly_substitution,
    verify,
)
from .poly_core import L, M, Z, CanonicalForm, ExpVec, LaurentPoly, canonicalize, equal_up_to_units

__all__ = [
    "METHODS",
    "APoly",
    "VerifyReport",
    "a_poly_explicit",
    "a_poly_resultant",
    "a_poly_substitution",
    "verify",
    "L",
    "M",
    "Z",
    "CanonicalForm",
    "ExpVec",
    "LaurentPoly",
    "canonicalize",
    "equal_up_to_units",
]
