"""torarr: exact invariants of Euclidean, affine and toric hyperplane
arrangements — intersection posets, characteristic polynomials, region
counts, flag vectors and face indexes in the letters a, b / c, d."""

from . import errors
from .ncpoly import (
    AbPoly,
    CdPoly,
    ab_to_cd,
    cd_to_ab,
    coproduct,
    format_poly,
    h_prime,
    kary_coproduct,
    letter_map,
    omega,
    parse_ab,
    parse_cd,
    phi,
    phi_t,
    phi_ub,
    projective_half,
    r_map,
    reverse,
    torus_normal_form,
)
from .posets import RankedPoset
from .unipoly import IntPoly

__all__ = [
    "AbPoly",
    "CdPoly",
    "IntPoly",
    "RankedPoset",
    "ab_to_cd",
    "cd_to_ab",
    "coproduct",
    "errors",
    "format_poly",
    "h_prime",
    "kary_coproduct",
    "letter_map",
    "omega",
    "parse_ab",
    "parse_cd",
    "phi",
    "phi_t",
    "phi_ub",
    "projective_half",
    "r_map",
    "reverse",
    "torus_normal_form",
]

__version__ = "0.1.0"
