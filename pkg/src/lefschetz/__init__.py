"""Lefschetz properties of artinian quotients of ``K[x, y]`` in every characteristic.

The monomial engine decides the strong Lefschetz property from closed-form
determinants of binomial matrices; polynomial ideals go through Gröbner
bases and a generic linear form; a small three-variable module checks the
weak Lefschetz property.
"""
from __future__ import annotations

__version__ = "0.1.0"

from .errors import (
    ExplosionGuard,
    ForcingHolds,
    InvalidHilbert,
    InvalidWidth,
    LefschetzError,
    NotArtinian,
    NotPrime,
    NotSquarePair,
    ParseError,
    PreconditionFailed,
    ResourceLimit,
    ShapeMismatch,
    SizeMismatch,
)
from .ideal import (
    Monomial2,
    MonomialIdeal2,
    degree_slice,
    hilbert_function,
    is_lexsegment_in_degree,
    iter_artinian_ideals,
    lex_defect,
    width_function,
)
from .macaulay import (
    h_forces_lexsegment,
    is_valid_hilbert,
    is_valid_width,
    lex_ideal_from_hilbert,
    lex_ideal_from_width,
    macaulay_expansion,
    macaulay_upper,
    non_lex_witness_from_h,
    non_lex_witness_from_w,
    satisfies_macaulay,
    w_forces_lexsegment,
)
from .maps import build_matrix, closed_form_det, det_exact, is_unimodular, reduce_to_hat, square_pairs
from .slp import (
    always_slp,
    bad_primes,
    family_verdict_dd,
    family_verdict_small,
    has_slp,
    has_wlp,
    width_bound,
    width_bound_attained,
    width_bound_is_sharp,
    width_failure_degree,
)
from .lattice import build_lattice, count_nilp_families, lgv_verify, render_lattice
from .groebner import (
    BivariatePoly,
    FieldSpec,
    buchberger,
    has_slp_generic,
    initial_ideal,
    is_artinian_poly,
    quotient_basis,
    slp_via_initial,
)
from .codim3 import (
    MonomialIdeal3,
    cokernel_bridge,
    has_wlp3,
    hilbert3,
    wlp3_bad_primes,
    wlp3_matrix,
    wlp_for_large_char,
)
