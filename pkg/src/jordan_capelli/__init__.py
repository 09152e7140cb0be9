"""Exact Capelli eigenvalues for the unital simple Jordan superalgebras.

Interpolation polynomials (shifted super Jack and factorial Schur Q), the
seven-case Jordan registry, and the Harish-Chandra span tests, all over
exact rationals.
"""
from .algebra import AffineMap, MPoly, Q, format_rational
from .capelli import eigenvalue, eigenvalue_table, normalized_poly, verify_capelli_lemma
from .errors import CapelliError
from .interpolation import factorial_schur_q, super_jack_shifted
from .jordan import JordanCase, composite_coordinates, highest_weight, is_multiplicity_free, make_case, omega, tau
from .partitions import frobenius_coords, parse_partition, transpose
from .rings import RingSpec, is_member, spanning_set

__version__ = "0.1.0"

__all__ = [
    "AffineMap", "CapelliError", "JordanCase", "MPoly", "Q", "RingSpec", "composite_coordinates",
    "eigenvalue", "eigenvalue_table", "factorial_schur_q", "format_rational", "frobenius_coords",
    "highest_weight", "is_member", "is_multiplicity_free", "make_case", "normalized_poly", "omega",
    "parse_partition", "spanning_set", "super_jack_shifted", "tau", "transpose", "verify_capelli_lemma",
]
