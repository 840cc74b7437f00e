"""Equilibrium outcomes measured against the manual no-delegation baseline.

In the baseline both members skip their representatives, pay a fixed manual
participation cost each, and the team decision lands on the preference
midpoint. Delegation shifts the decision toward the prior by the unrevealed
parts of each diversity, and that shift is pure waste in preference terms:
the team's summed preference loss exceeds the baseline's by exactly twice
the squared decision gap. Whether delegation still wins overall depends on
how the saved manual cost compares with the revelation costs plus that
wasted gap, which ``break_even_C`` expresses as the manual cost level at
which the two regimes tie.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .equilibrium import EquilibriumKind, EquilibriumResult, solve_equilibrium
from .game import (
    BaselineOutcomes,
    GameConfig,
    baseline_outcomes,
    derived_quantities,
    team_decision,
)


@dataclass(frozen=True)
class OutcomeReport:
    equilibrium: EquilibriumResult
    theta_T_star: float
    theta_T_baseline: float
    decision_gap: float
    e_T_star: float
    e_T_baseline: float
    e_A_star: float
    e_B_star: float
    delta_e_A: float
    delta_e_B: float
    cost_A_star: float
    cost_B_star: float
    L_T_star: float
    L_T_baseline: float
    break_even_C: float


def compare_outcomes(
    config: GameConfig, equilibrium: Optional[EquilibriumResult] = None
) -> OutcomeReport:
    """Solve (unless a result is supplied) and tabulate both regimes.

    ``L_T_baseline`` uses the config's ``manual_cost``; ``break_even_C`` is
    the manual cost at which the baseline's team loss would equal the
    equilibrium's, independent of the configured value.
    """
    if equilibrium is None:
        equilibrium = solve_equilibrium(config)
    baseline: BaselineOutcomes = baseline_outcomes(config)

    theta_star = team_decision(config, equilibrium.profile)
    gap = abs(theta_star - baseline.theta_T)
    e_A = equilibrium.losses_A.preference
    e_B = equilibrium.losses_B.preference
    cost_A = equilibrium.losses_A.cost
    cost_B = equilibrium.losses_B.cost
    e_team = e_A + e_B
    return OutcomeReport(
        equilibrium=equilibrium,
        theta_T_star=theta_star,
        theta_T_baseline=baseline.theta_T,
        decision_gap=gap,
        e_T_star=e_team,
        e_T_baseline=baseline.e_T,
        e_A_star=e_A,
        e_B_star=e_B,
        delta_e_A=e_A - baseline.e_A,
        delta_e_B=e_B - baseline.e_B,
        cost_A_star=cost_A,
        cost_B_star=cost_B,
        L_T_star=e_team + cost_A + cost_B,
        L_T_baseline=baseline.L_T,
        break_even_C=gap * gap + 0.5 * (cost_A + cost_B),
    )


@dataclass(frozen=True)
class EqualityCheck:
    """Cross-check of the no-waste condition against the realized outcome.

    The team's preference loss matches the baseline exactly when the
    unrevealed diversities cancel: kappa = -(1 - lambda_B*)/(1 - lambda_A*).
    Specialized per kind this reads kappa = -1 (nobody reveals),
    kappa = -1/(1 - lambda_A*) (only A reveals), kappa = -(1 - lambda_B*)
    (only B reveals), and the general ratio when both reveal; aligned
    preferences can never satisfy it. ``condition_met`` evaluates the ratio
    form and ``realized_zero`` tests the outcome difference directly.
    ``consistent`` asserts the robust direction, condition met implies no
    realized difference; the converse cannot be tested at a fixed tolerance
    because the realized difference shrinks quadratically in the condition
    residual. With d_B = 0 kappa is undefined and only the realized side is
    reported.
    """

    kind: EquilibriumKind
    kappa: Optional[float]
    required_kappa: Optional[float]
    condition_met: Optional[bool]
    realized_difference: float
    realized_zero: bool
    consistent: Optional[bool]


def equality_condition_check(
    config: GameConfig,
    report: Optional[OutcomeReport] = None,
    tolerance: float = 1e-6,
) -> EqualityCheck:
    if report is None:
        report = compare_outcomes(config)
    dq = derived_quantities(config)
    pair = config.functions
    profile = report.equilibrium.profile
    lam_A = float(pair.weight(profile.alpha_A))
    lam_B = float(pair.weight(profile.alpha_B))

    kappa = dq.kappa
    required = -(1.0 - lam_B) / (1.0 - lam_A)
    condition_met: Optional[bool]
    if kappa is None:
        condition_met = None
    else:
        condition_met = abs(kappa - required) <= tolerance

    realized = report.e_T_star - report.e_T_baseline
    realized_zero = abs(realized) <= tolerance
    if condition_met is None:
        consistent = None
    else:
        consistent = realized_zero if condition_met else True
    return EqualityCheck(
        kind=report.equilibrium.kind,
        kappa=kappa,
        required_kappa=required if kappa is not None else None,
        condition_met=condition_met,
        realized_difference=realized,
        realized_zero=realized_zero,
        consistent=consistent,
    )
