"""Chromatic polynomials and chromatic uniqueness of K4-homeomorphs."""

from .chromatic import chrom_equivalent, chromatic_polynomial, chromatic_polynomial_dc, essential_polynomial
from .k4homeo import K4Homeomorph, canonicalize, girth, girth_cycle_count, make_homeomorph, parse_homeomorph
from .polyring import IntPolynomial

__all__ = [
    "IntPolynomial",
    "K4Homeomorph",
    "make_homeomorph",
    "parse_homeomorph",
    "canonicalize",
    "girth",
    "girth_cycle_count",
    "essential_polynomial",
    "chromatic_polynomial",
    "chromatic_polynomial_dc",
    "chrom_equivalent",
]

__version__ = "0.1.0"
