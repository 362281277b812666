"""Exact greedy Galois game shot sequences and their agreement with Thue-Morse."""

from .convergence import (
    AgreementResult,
    CapExceeded,
    IntervalClass,
    Kind,
    Method,
    NCapExceeded,
    ZeroSign,
    admissible_values,
    agreement_length_closed_form,
    agreement_length_simulated,
    classify,
    corollary_check,
)
from .game import (
    GameParameter,
    ShotSequence,
    SignTestTie,
    WinProbabilities,
    greedy_sequence,
    next_shot,
    sign_test,
    sign_test_transferred,
    win_probabilities,
)
from .numerics import (
    BoundaryPolynomial,
    Sign,
    approx_boundary,
    format_rational,
    pow_by_squaring,
    sign_of_boundary,
    to_rational,
)
from .thue_morse import (
    DyadicDecomposition,
    decompose_dyadic,
    digit_sum_base2,
    partial_sum_direct,
    partial_sum_factored,
    tm,
    tm_prefix,
)

__version__ = "0.1.0"
