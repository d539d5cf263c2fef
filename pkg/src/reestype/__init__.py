"""Sifted degrees, relation type and Artin-Rees numbers of polynomial ideals."""

__version__ = "0.1.0"

from .artin_rees import (
    ArtinReesComputation,
    ArtinReesReport,
    artin_rees_numbers,
    artin_rees_profile,
    medium_number,
    strong_number,
    weak_number,
)
from .errors import (
    ConstraintError,
    ContextMismatchError,
    DegenerateIdealError,
    PolynomialSyntaxError,
    ReesError,
    ResourceLimitExceeded,
    UnknownVariableError,
)
from .euclid import FamilySpec, euclid_trace, family_ideal, fibonacci_report, sifted_closed_form
from .groebner import Ideal, groebner_basis, ideal_intersect, ideal_power, limits, normal_form
from .monomial import MonomialIdeal
from .parse import parse_polynomial, parse_polynomials
from .polyring import Polynomial, TermOrder, VariableContext, format_polynomial
from .rees import (
    InvariantReport,
    ReesPresentation,
    effective_profile,
    invariant_report,
    rees_kernel,
    sifted_invariants,
)

__all__ = [
    "ArtinReesComputation", "ArtinReesReport", "artin_rees_numbers", "artin_rees_profile",
    "medium_number", "strong_number", "weak_number",
    "ConstraintError", "ContextMismatchError", "DegenerateIdealError", "PolynomialSyntaxError",
    "ReesError", "ResourceLimitExceeded", "UnknownVariableError",
    "FamilySpec", "euclid_trace", "family_ideal", "fibonacci_report", "sifted_closed_form",
    "Ideal", "groebner_basis", "ideal_intersect", "ideal_power", "limits", "normal_form",
    "MonomialIdeal", "parse_polynomial", "parse_polynomials",
    "Polynomial", "TermOrder", "VariableContext", "format_polynomial",
    "InvariantReport", "ReesPresentation", "effective_profile", "invariant_report", "rees_kernel",
    "sifted_invariants",
]
