"""Nash equilibria of the two-member revelation game.

Equilibria come in five kinds. Nobody reveals (NR), exactly one member
reveals (OPR-A / OPR-B, always the member with the larger diversity
magnitude), or both reveal (BPR), the last split by whether the members'
diversities have opposite signs (BPR-Conflicting) or the same sign
(BPR-Aligned).

``classify_equilibrium`` decides the kind from closed-form inequalities in
the primitives alone, without iterating; the solvers then produce the
profile each kind prescribes. ``verify_equilibrium`` checks a claimed
profile against unilateral grid deviations, which is also how the
classification's knife-edge tie-breaks were pinned down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Optional

from .best_response import (
    at_least_threshold,
    best_response,
    exceeds_threshold,
    invert_reveal_benefit,
    revelation_threshold,
)
from .errors import ConvergenceError, InvalidParameterError, NoRootError
from .game import (
    GameConfig,
    DerivedQuantities,
    LossBreakdown,
    Member,
    MEMBERS,
    RevelationProfile,
    derived_quantities,
    loss_breakdown,
    member_loss,
    other_member,
)

EquilibriumKind = Literal[
    "NR", "OPR-A", "OPR-B", "BPR-Conflicting", "BPR-Aligned"
]

_BPR_TOL = 1e-10
_BPR_MAX_ROUNDS = 10_000
_RESIDUAL_BOUND = 1e-8


@dataclass(frozen=True)
class Classification:
    kind: EquilibriumKind
    condition_trace: tuple[tuple[str, bool], ...]


@dataclass(frozen=True)
class EquilibriumResult:
    kind: EquilibriumKind
    profile: RevelationProfile
    losses_A: LossBreakdown
    losses_B: LossBreakdown
    iterations: int
    residual: float
    condition_trace: tuple[tuple[str, bool], ...]


def classify_equilibrium(
    config: GameConfig, dq: Optional[DerivedQuantities] = None
) -> Classification:
    """Decide the equilibrium kind from closed-form threshold inequalities.

    Roles are normalized so the inequalities are stated for the member with
    the larger |d| (ties go to A); the middle price band, where neither the
    always-reveal nor the never-reveal test settles the smaller member, is
    resolved by comparing the larger member's solo revelation level against
    the threshold that would switch the smaller member on.
    """
    if dq is None:
        dq = derived_quantities(config)
    pair = config.functions
    p = dq.trigger_price
    trace: list[tuple[str, bool]] = []

    big: Member = "A" if abs(dq.d_A) >= abs(dq.d_B) else "B"
    small = other_member(big)
    d_big = dq.d(big)
    d_small = dq.d(small)
    trace.append((f"larger_diversity_member: {big}", True))

    if d_big == 0.0:
        trace.append(("both_on_prior", True))
        return Classification("NR", tuple(trace))
    big_sq = d_big * d_big
    if d_small == 0.0:
        reveals = big_sq > p
        trace.append(("one_on_prior", True))
        trace.append(("opr_if: d_big^2 > p", reveals))
        kind: EquilibriumKind = f"OPR-{big}" if reveals else "NR"  # type: ignore[assignment]
        return Classification(kind, tuple(trace))

    kappa = d_big / d_small
    small_sq = d_small * d_small
    opr_kind: EquilibriumKind = "OPR-A" if big == "A" else "OPR-B"

    if kappa < 0.0:
        trace.append(("conflicting: kappa <= -1", True))
        nr = big_sq < p
        trace.append(("nr_if: d_big^2 < p", nr))
        if nr:
            return Classification("NR", tuple(trace))
        both = small_sq >= p
        trace.append(("bpr_if: d_small^2 >= p", both))
        if both:
            return Classification("BPR-Conflicting", tuple(trace))
        solo = small_sq * (1.0 - kappa / 2.0) <= p
        trace.append(("opr_if: d_small^2*(1-kappa/2) <= p", solo))
        if solo:
            return Classification(opr_kind, tuple(trace))
        solo_level = invert_reveal_benefit(dq, pair, big, 2.0)
        threshold = revelation_threshold(dq, pair, big)
        opr = not exceeds_threshold(solo_level, threshold)
        trace.append(("middle_opr_if: solo_level <= threshold_big", opr))
        kind = opr_kind if opr else "BPR-Conflicting"
        return Classification(kind, tuple(trace))

    trace.append(("aligned: kappa >= 1", True))
    nr = big_sq <= p
    trace.append(("nr_if: d_big^2 <= p", nr))
    if nr:
        return Classification("NR", tuple(trace))
    solo = small_sq <= p
    trace.append(("opr_if: d_small^2 <= p", solo))
    if solo:
        return Classification(opr_kind, tuple(trace))
    both = small_sq * (1.0 - kappa / 2.0) >= p
    trace.append(("bpr_if: d_small^2*(1-kappa/2) >= p", both))
    if both:
        return Classification("BPR-Aligned", tuple(trace))
    solo_level = invert_reveal_benefit(dq, pair, big, 2.0)
    threshold = revelation_threshold(dq, pair, big)
    # Tie-break deliberately weak on the revealing side here, the mirror
    # image of the conflicting band above; both were confirmed against
    # grid search before freezing.
    opr = at_least_threshold(solo_level, threshold)
    trace.append(("middle_opr_if: solo_level >= threshold_big", opr))
    kind = opr_kind if opr else "BPR-Aligned"
    return Classification(kind, tuple(trace))


def solve_opr(
    config: GameConfig,
    revealing_member: Member,
    dq: Optional[DerivedQuantities] = None,
) -> RevelationProfile:
    """Profile where one member reveals their solo level and the other none.

    With the opponent silent the revealing member's first-order target is
    exactly 2, independent of either diversity's sign.
    """
    if dq is None:
        dq = derived_quantities(config)
    alpha = invert_reveal_benefit(dq, config.functions, revealing_member, 2.0)
    profile = RevelationProfile(alpha_A=0.0, alpha_B=0.0)
    return profile.with_alpha(revealing_member, alpha)


def solve_bpr(
    config: GameConfig,
    dq: Optional[DerivedQuantities] = None,
    tol: float = _BPR_TOL,
    max_rounds: int = _BPR_MAX_ROUNDS,
) -> tuple[RevelationProfile, int]:
    """Both-reveal fixed point by alternating damped best-response sweeps.

    Starts each member at their solo level (zero when that level does not
    exist because d^2 < p, which happens on the conflicting side where a
    low-diversity member is dragged into revealing). Residual is the largest
    distance between a member's level and their fresh best response; after
    three consecutive sweeps without residual improvement the update is
    permanently damped by half, which is enough because the composed
    best-response map is a contraction on the interior.
    """
    if dq is None:
        dq = derived_quantities(config)
    if not tol > 0.0:
        raise InvalidParameterError(f"tol must be positive, got {tol!r}")

    levels: dict[Member, float] = {}
    for m in MEMBERS:
        try:
            levels[m] = invert_reveal_benefit(dq, config.functions, m, 2.0)
        except NoRootError:
            levels[m] = 0.0

    damping = 1.0
    stall = 0
    prev_residual = math.inf
    residual = math.inf
    for rounds in range(1, max_rounds + 1):
        for m in MEMBERS:
            br = best_response(config, m, levels[other_member(m)], dq)
            levels[m] += damping * (br.alpha_star - levels[m])
        residual = 0.0
        for m in MEMBERS:
            br = best_response(config, m, levels[other_member(m)], dq)
            residual = max(residual, abs(levels[m] - br.alpha_star))
        if residual <= tol:
            profile = RevelationProfile(alpha_A=levels["A"], alpha_B=levels["B"])
            return profile, rounds
        if residual >= prev_residual:
            stall += 1
            if stall >= 3:
                damping = 0.5
        else:
            stall = 0
        prev_residual = residual

    raise ConvergenceError(
        f"best-response iteration did not reach {tol} in {max_rounds} rounds",
        last_profile=RevelationProfile(alpha_A=levels["A"], alpha_B=levels["B"]),
        residual=residual,
    )


def _profile_residual(
    config: GameConfig, dq: DerivedQuantities, profile: RevelationProfile
) -> float:
    residual = 0.0
    for m in MEMBERS:
        br = best_response(config, m, profile.alpha(other_member(m)), dq)
        residual = max(residual, abs(profile.alpha(m) - br.alpha_star))
    return residual


def solve_equilibrium(config: GameConfig) -> EquilibriumResult:
    """Classify, solve the indicated kind, and self-check the residual."""
    dq = derived_quantities(config)
    classification = classify_equilibrium(config, dq)
    kind = classification.kind
    iterations = 0
    if kind == "NR":
        profile = RevelationProfile(alpha_A=0.0, alpha_B=0.0)
    elif kind in ("OPR-A", "OPR-B"):
        member: Member = "A" if kind == "OPR-A" else "B"
        profile = solve_opr(config, member, dq)
    else:
        profile, iterations = solve_bpr(config, dq)

    residual = _profile_residual(config, dq, profile)
    if residual > _RESIDUAL_BOUND:
        raise ConvergenceError(
            f"solved profile fails its own best-response check "
            f"(residual {residual:.3e} > {_RESIDUAL_BOUND})",
            last_profile=profile,
            residual=residual,
        )
    return EquilibriumResult(
        kind=kind,
        profile=profile,
        losses_A=loss_breakdown(config, profile, "A"),
        losses_B=loss_breakdown(config, profile, "B"),
        iterations=iterations,
        residual=residual,
        condition_trace=classification.condition_trace,
    )


@dataclass(frozen=True)
class VerificationResult:
    passed: bool
    tolerance: float
    improvement_A: float
    improvement_B: float

    @property
    def max_improvement(self) -> float:
        return max(self.improvement_A, self.improvement_B)


def verify_equilibrium(
    config: GameConfig,
    profile: RevelationProfile,
    grid_step: float = 1e-4,
) -> VerificationResult:
    """Check that no unilateral grid deviation improves a member's loss.

    Scans every multiple of ``grid_step`` (plus the cap) for each member with
    the other held fixed. Passes when the best improvement found stays within
    ``1e-6 + 2 * grid_step``, a bound covering both solver tolerance and the
    loss variation across one grid cell.
    """
    if not 0.0 < grid_step <= 0.1:
        raise InvalidParameterError(
            f"grid_step must lie in (0, 0.1], got {grid_step!r}"
        )
    from .oracle import deviation_levels, loss_grid

    levels = deviation_levels(grid_step, config.functions.alpha_cap)
    improvements = {}
    for m in MEMBERS:
        current = member_loss(config, profile, m)
        losses = loss_grid(config, m, levels, profile.alpha(other_member(m)))
        improvements[m] = float(current - losses.min())
    tolerance = 1e-6 + 2.0 * grid_step
    passed = max(improvements.values()) <= tolerance
    return VerificationResult(
        passed=passed,
        tolerance=tolerance,
        improvement_A=improvements["A"],
        improvement_B=improvements["B"],
    )
