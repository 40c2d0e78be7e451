"""Exact computations in the alternating colored permutation group A(r, n)."""
from .core import (
    ColoredPermutation,
    ColoredValue,
    GroupParams,
    col_set,
    conjugate_by_half_twist,
    csum,
    enumerate_group,
    format_window,
    generator_s,
    identity,
    inv_colored,
    inv_plain,
    inverse,
    length_order_less,
    multiply,
    oslash,
    parse_window,
    rank,
    unrank,
    validate_params,
)
from .canonical import (
    AWord,
    CanonicalDecomposition,
    SWord,
    canonical_a_word,
    canonical_s_word,
    enumerate_alternating,
    eval_a_word,
    eval_s_word,
    generator_a,
    is_alternating,
    length_LA,
    ordered_target,
    structured_decomposition,
    translate_pairs,
)
from .covering import fiber, fibral_length, finv_a, length_g, project, rtlmin_a, section
from .qseries import QPolynomial, genfun_bruteforce, genfun_formula
from .oracle import VerificationReport, bfs_lengths, run_suite

__version__ = "0.1.0"
