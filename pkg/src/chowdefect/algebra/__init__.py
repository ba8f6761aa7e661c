"""Exact arithmetic for graded multivariate polynomials over prime fields."""

from chowdefect.algebra.linalg import coordinates, nullspace_mod_p, rank_mod_p
from chowdefect.algebra.ops import (
    apply_substitution,
    compose_substitutions,
    degree,
    divides,
    format_poly,
    homogeneous_component,
    homogeneous_components,
    is_homogeneous,
    monomials_of_degree,
    poly_add,
    poly_mul,
)
from chowdefect.algebra.parser import parse_polynomial
from chowdefect.algebra.ring import (
    Monomial,
    Polynomial,
    RingContext,
    coefficient,
    context_of,
    flag_context,
    make_context,
    q_context,
)

__all__ = [
    "Monomial",
    "Polynomial",
    "RingContext",
    "apply_substitution",
    "coefficient",
    "compose_substitutions",
    "context_of",
    "coordinates",
    "degree",
    "divides",
    "flag_context",
    "format_poly",
    "homogeneous_component",
    "homogeneous_components",
    "is_homogeneous",
    "make_context",
    "monomials_of_degree",
    "nullspace_mod_p",
    "parse_polynomial",
    "poly_add",
    "poly_mul",
    "q_context",
    "rank_mod_p",
]
