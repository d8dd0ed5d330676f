"""Exact tools for parsimonious games.

Parsimonious games are the constant-sum homogeneous weighted majority games
with the minimum possible number of minimal winning coalitions: exactly one
per player.  This package constructs them from their free type
representations, builds their incidence matrices, computes twins, exact
determinants and the unique balanced lottery, and verifies all of it against
definition-level brute force.
"""
from .core import (
    FreeTypeRep,
    PGame,
    build_game,
    check_weight_identities,
    parse_free_rep,
    parse_min_homog_rep,
    parse_representation,
    validate_free_type_rep,
)
from .errors import (
    BadInput,
    BoundViolation,
    EmptyRep,
    NotParsimonious,
    OutOfRange,
    Overflow,
    ParsimoniousGameError,
    SingularSystem,
    TheoremViolation,
    TooLarge,
    TooSmall,
    TwinMismatch,
)
from .incidence import (
    IncidenceMatrix,
    build_incidence_matrix,
    coalition_of_player,
    determinant,
    determinant_by_triangularization,
    triangularization_coefficients,
    verify_block_structure,
)
from .lottery import (
    BalancedLottery,
    balanced_lottery,
    expected_payoffs,
    simulate_lottery,
    solve_balanced_system,
    verify_balanced,
)
from .oracle import (
    Coalition,
    CoalitionSet,
    VerificationReport,
    check_axioms,
    determinant_cofactor_oracle,
    enumerate_p_games,
    full_verify,
    minimal_winning_coalitions_bruteforce,
    verify_sweep,
)
from .twin import TwinPair, is_self_twin, modified_transpose, twin_game, twin_rep

__version__ = "0.1.0"

__all__ = [
    "BadInput",
    "BalancedLottery",
    "BoundViolation",
    "Coalition",
    "CoalitionSet",
    "EmptyRep",
    "FreeTypeRep",
    "IncidenceMatrix",
    "NotParsimonious",
    "OutOfRange",
    "Overflow",
    "PGame",
    "ParsimoniousGameError",
    "SingularSystem",
    "TheoremViolation",
    "TooLarge",
    "TooSmall",
    "TwinMismatch",
    "TwinPair",
    "VerificationReport",
    "balanced_lottery",
    "build_game",
    "build_incidence_matrix",
    "check_axioms",
    "check_weight_identities",
    "coalition_of_player",
    "determinant",
    "determinant_by_triangularization",
    "determinant_cofactor_oracle",
    "enumerate_p_games",
    "expected_payoffs",
    "full_verify",
    "is_self_twin",
    "minimal_winning_coalitions_bruteforce",
    "modified_transpose",
    "parse_free_rep",
    "parse_min_homog_rep",
    "parse_representation",
    "simulate_lottery",
    "solve_balanced_system",
    "triangularization_coefficients",
    "twin_game",
    "twin_rep",
    "validate_free_type_rep",
    "verify_balanced",
    "verify_block_structure",
    "verify_sweep",
]
