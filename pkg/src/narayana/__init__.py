"""Exact-arithmetic toolkit for the Narayana family of recurrences."""

from .sequences import (
    Family,
    FamilyParams,
    a_term,
    count_gap_strings,
    count_no_q_ones,
    g_term,
    p_term,
    t_term,
    u_term,
)
from .representations import (
    FarDifferenceRep,
    QRepresentation,
    TriQRepresentation,
    cumulative_S,
    far_difference_rep,
    greedy_q_rep,
    rep_to_composition,
    rep_value,
    sum_of_digits,
    tribonacci_greedy_rep,
    validate_q_rep,
)
from .compositions import (
    Composition,
    PartConstraint,
    conjugate,
    count_compositions,
    enumerate_compositions,
    macmahon_inverse,
    macmahon_sequence,
    sills_inverse,
    sills_map,
)
from .identities import (
    IdentityReport,
    binomial_diagonal_sum,
    c_A_constant,
    cross_family_coincidences,
    footnote_identity_check,
    verify_binomial_identity,
    verify_sum_identity,
    verify_weighted_identity,
    weighted_binomial_sum,
)
from .nim import (
    GameConfig,
    GameState,
    Variant,
    apply_move,
    legal_moves,
    least_summand_recovery,
    max_take,
    new_game,
    solve,
    strategy_move,
)
from .beatty import (
    RootEnclosure,
    beatty_a,
    beatty_b,
    check_complementarity,
    compose_word,
    dominant_root,
    kimberling_error,
    kimberling_error_q2,
)
from .analogs import AnalogReport, sills_analog_probe, verify_padovan_counts, verify_tribonacci_counts

__version__ = "0.1.0"
