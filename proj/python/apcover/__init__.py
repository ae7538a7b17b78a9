"""Python bindings for the apcover C++ library."""

from ._core import (
    ArithmeticSequence,
    CoveringSequence,
    CoverReport,
    DensitySample,
    ElementRange,
    FiniteSequence,
    IntegerSequence,
    QPoint,
    SweepSummary,
    TElement,
    Witness,
    argmax_upto,
    compare_ratio,
    convergence_gap,
    count_leq,
    covers,
    decompose,
    digit_at,
    element_at,
    encode,
    explore_problem1,
    find_witness,
    from_digits,
    greedy_next,
    has_k_ap,
    iter_range,
    level_for,
    level_max,
    level_min,
    limit_ratio_sq,
    member,
    min_threshold,
    profile,
    q_point,
    run_cli,
    sample_at,
    stanley_generate,
    stanley_upto,
    to_digits,
    validate,
    verify_covering,
    weak_covers,
)

__version__ = "0.1.0"
