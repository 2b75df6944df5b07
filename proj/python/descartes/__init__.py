"""Exact realizability of sign patterns with prescribed numbers of positive and negative roots.

Polynomials are lists of coefficients in ascending degree; entries may be
``fractions.Fraction``, ``int`` or strings such as ``"3/4"``. Results use
``Fraction``.
"""

from ._core import (
    Error,
    Incompatible,
    IsDPattern,
    OrderInfeasible,
    SearchExhausted,
    canonical_order,
    compatible_pairs,
    d4_membership,
    d5_case,
    dbis_verdict,
    disconnect,
    modulus_signature,
    orbit,
    realize,
    realize_30,
    realize_with_order,
    root_profile,
    verify,
)

__all__ = [
    "Error",
    "Incompatible",
    "IsDPattern",
    "OrderInfeasible",
    "SearchExhausted",
    "canonical_order",
    "compatible_pairs",
    "d4_membership",
    "d5_case",
    "dbis_verdict",
    "disconnect",
    "modulus_signature",
    "orbit",
    "realize",
    "realize_30",
    "realize_with_order",
    "root_profile",
    "verify",
]
