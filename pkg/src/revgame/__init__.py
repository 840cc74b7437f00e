"""Numerical toolkit for the two-member information-revelation game.

Two team members delegate a decision to representatives trained on what
each member chooses to reveal about their own preference; unrevealed
preference mass defaults to a shared prior. The package solves each
member's best response, classifies and solves the Nash equilibrium,
compares the outcome with a manual no-delegation baseline, and checks all
of it against a brute-force grid oracle.
"""

from .best_response import (
    BestResponseResult,
    ThresholdSentinel,
    best_response,
    invert_reveal_benefit,
    reveal_benefit,
    revelation_threshold,
    strategic_impact,
)
from .equilibrium import (
    Classification,
    EquilibriumResult,
    VerificationResult,
    classify_equilibrium,
    solve_bpr,
    solve_equilibrium,
    solve_opr,
    verify_equilibrium,
)
from .errors import (
    ConfigError,
    ConvergenceError,
    DegenerateMemberError,
    FunctionPairError,
    GameModelError,
    InvalidParameterError,
    NoRootError,
    OracleError,
)
from .functions import (
    ALPHA_CAP,
    FunctionPair,
    ValidationReport,
    make_linear_log_pair,
    trigger_price,
    validate_function_pair,
)
from .game import (
    BaselineOutcomes,
    DerivedQuantities,
    GameConfig,
    LossBreakdown,
    RevelationProfile,
    baseline_outcomes,
    derived_quantities,
    load_config_file,
    loss_breakdown,
    member_loss,
    other_member,
    parse_config_text,
    team_decision,
)
from .oracle import GridSpec, brute_force_best_response, brute_force_equilibrium
from .outcomes import (
    EqualityCheck,
    OutcomeReport,
    compare_outcomes,
    equality_condition_check,
)
from .sweeps import FIGURES, SweepSpec, build_figure, region_rows, run_sweep

__version__ = "0.1.0"

__all__ = [
    "ALPHA_CAP",
    "BaselineOutcomes",
    "BestResponseResult",
    "Classification",
    "ConfigError",
    "ConvergenceError",
    "DegenerateMemberError",
    "DerivedQuantities",
    "EqualityCheck",
    "EquilibriumResult",
    "FIGURES",
    "FunctionPair",
    "FunctionPairError",
    "GameConfig",
    "GameModelError",
    "GridSpec",
    "InvalidParameterError",
    "LossBreakdown",
    "NoRootError",
    "OracleError",
    "OutcomeReport",
    "RevelationProfile",
    "SweepSpec",
    "ThresholdSentinel",
    "ValidationReport",
    "VerificationResult",
    "baseline_outcomes",
    "best_response",
    "brute_force_best_response",
    "brute_force_equilibrium",
    "build_figure",
    "classify_equilibrium",
    "compare_outcomes",
    "derived_quantities",
    "equality_condition_check",
    "invert_reveal_benefit",
    "load_config_file",
    "loss_breakdown",
    "make_linear_log_pair",
    "member_loss",
    "other_member",
    "parse_config_text",
    "region_rows",
    "reveal_benefit",
    "revelation_threshold",
    "run_sweep",
    "solve_bpr",
    "solve_equilibrium",
    "solve_opr",
    "strategic_impact",
    "team_decision",
    "trigger_price",
    "validate_function_pair",
    "verify_equilibrium",
]
