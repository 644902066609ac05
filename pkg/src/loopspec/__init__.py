"""Exact certificates for generalized spectral characterization of graphs with loops."""

from .certify import (
    COMBINED,
    INCONCLUSIVE,
    WALK_DET,
    Certificate,
    RationalOrthogonal,
    certify_combined,
    certify_walk_det,
    construct_q,
    level_prime_check,
)
from .factor import Factorization, factor, is_square_free
from .graphs import LoopyGraph, SignedPermutation, apply_signed_perm, canonical_form, is_isomorphic
from .linalg import bareiss_det, charpoly, fp_kernel, fp_rank, rational_inverse, resultant
from .oracle import build_index, find_mates, satisfaction_frequency, verify_theorem
from .spectral import (
    GeneralizedCharPoly,
    beta_decompose,
    discriminant,
    find_single_root_shift,
    generalized_charpoly,
    minimal_poly_mod_p,
    walk_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "COMBINED",
    "Certificate",
    "Factorization",
    "GeneralizedCharPoly",
    "INCONCLUSIVE",
    "LoopyGraph",
    "RationalOrthogonal",
    "SignedPermutation",
    "WALK_DET",
    "apply_signed_perm",
    "bareiss_det",
    "beta_decompose",
    "build_index",
    "canonical_form",
    "certify_combined",
    "certify_walk_det",
    "charpoly",
    "construct_q",
    "discriminant",
    "factor",
    "find_mates",
    "find_single_root_shift",
    "fp_kernel",
    "fp_rank",
    "generalized_charpoly",
    "is_isomorphic",
    "is_square_free",
    "level_prime_check",
    "minimal_poly_mod_p",
    "rational_inverse",
    "resultant",
    "satisfaction_frequency",
    "verify_theorem",
    "walk_matrix",
]
