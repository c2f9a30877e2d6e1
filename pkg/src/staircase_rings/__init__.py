"""
Exact-arithmetic toolkit for the graded quotient rings indexed by a
partition inside s blocks: staircase monomial bases, ordered set
partitions, extended column-increasing fillings with their inv and dinv
statistics, Hilbert series, graded Frobenius characteristics, stable
(s -> infinity) limits, and an independent linear-algebra oracle.
"""

from .fillings import (
    ExtendedFilling,
    dinv,
    dinvcode,
    enumerate_eci_bounded,
    enumerate_seci,
    insert_dinv,
    insert_inv,
    inv,
    inv_reading_word,
    invcode,
    reading_word,
)
from .frobenius import (
    GradedModuleSeries,
    frob,
    hilb,
    hl_expansion_check,
    monotonicity_check,
    rank_frob,
    rank_hilb,
    removing_zeros_check,
    skew_recursion_check,
    ungraded_frob,
    ungraded_frob_h,
)
from .oracle import (
    GradedQuotient,
    graded_character,
    graded_frobenius_oracle,
    hilbert_function,
    ideal_generators,
    murnaghan_nakayama,
    normal_form,
    verify_basis,
)
from .osp import count_osp, enumerate_osp, osp_to_seci, permute_osp, seci_to_osp
from .qpoly import QPoly, q_binomial, q_factorial, q_int, q_multinomial, q_stirling, rev_q
from .shapes import (
    conjugate,
    dominance_leq,
    enumerate_staircase_set,
    in_staircase_set,
    increasing_sequences,
    multi_reduction,
    p_stat,
    reduction,
)
from .symfunc import (
    FundExpansion,
    SchurExpansion,
    e_perp,
    fund_to_schur,
    h_to_schur,
    hilbert_coefficient,
    hl_qprime_rev,
    kostka,
    llt_rows,
    schur_to_fund,
)

__all__ = [name for name in dir() if not name.startswith("_")]
