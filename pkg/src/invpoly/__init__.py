"""Exact enumeration of restricted inversion polynomials.

Count permutations whose inversions within a sliding window (given by a
weakly increasing bounding sequence h with h(i) > i) form a prescribed
set, expand the resulting polynomial in n in several binomial bases, and
study the graded (length-tracking) q-analogue.
"""

from invpoly.enumeration import (
    A_star_set,
    B_k_set,
    enumerate_Ih,
    enumerate_admissible,
    fiber_data,
    graded_Ih_oracle,
    poincare,
    t_of,
)
from invpoly.expansions import (
    CoeffSeq,
    ExpansionResult,
    a_expansion,
    a_from_b,
    b_expansion,
    degree_of,
    fiber_expansion,
    is_constant,
)
from invpoly.graded import (
    GradedExpansion,
    b_q_coefficients,
    graded_expansion_eval,
    length_split_check,
    verify_conjecture,
)
from invpoly.kernels import BACKEND as KERNEL_BACKEND
from invpoly.model import (
    HSequence,
    PairSet,
    Permutation,
    flatten,
    inv_h,
    is_admissible,
    is_h_closed,
    j_of,
    length,
    m_of,
    possible_pairs,
)
from invpoly.polynomials import (
    BinomialPoly,
    MonomialPoly,
    QPoly,
    binom,
    eval_binomial_poly,
    has_no_internal_zeros,
    is_log_concave,
    is_pf2,
    q_binom,
    q_seq_strongly_log_concave,
    subset_length,
    to_monomial,
)
from invpoly.posets import (
    Poset,
    b_from_heights,
    build_poset,
    d_S_of,
    height_sequence,
    height_support_bounds,
    linear_extensions,
)

__version__ = "0.1.0"
