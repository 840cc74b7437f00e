"""Optimal revelation for one member against the other's fixed level.

Fix the opponent's revelation level. A member either stays silent (zero
branch) or reveals up to the point where the marginal cost of revealing
matches the marginal reduction in preference loss (reveal branch). With
``d_m = theta_m - mu_G`` and ``kappa = d_m / d_other``, the first-order
condition of the member's loss can be written as

    benefit(alpha) = lambda(alpha) + (2 / d_m**2) * c'(alpha) / lambda'(alpha)
                   = 2 - lambda(alpha_other) / kappa = impact(alpha_other),

where the left side is strictly increasing in alpha. Whether the member
reveals at all is gated by the trigger price p = c'(0) / lambda'(0): with the
opponent silent, revealing pays exactly when d_m**2 exceeds p, and a
threshold on the opponent's level decides the intermediate price range. Which
side of the threshold triggers revelation flips with the sign of kappa:
a conflicting opponent revealing more drags the team decision away and
provokes revelation, an aligned opponent revealing more does the member's
work and lets them free-ride.

Every inequality that the case analysis evaluates is recorded in the
result's ``condition_trace`` so classifications can be audited.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Literal, Optional, Union

from .errors import DegenerateMemberError, InvalidParameterError, NoRootError
from .functions import FunctionPair, bisect_increasing
from .game import (
    DerivedQuantities,
    GameConfig,
    Member,
    derived_quantities,
    other_member,
)

# Inversion runs tighter than the documented 1e-10 guarantee so that the
# equilibrium fixed-point residual has headroom below its own tolerance.
_INVERT_TOL = 1e-13


class ThresholdSentinel(enum.Enum):
    """Stand-ins for a revelation threshold outside the weight's range."""

    BELOW = "below"  # threshold argument < 0: every opponent level exceeds it
    ABOVE = "above"  # threshold argument >= 1: no opponent level exceeds it


Threshold = Union[float, ThresholdSentinel]


def exceeds_threshold(level: float, threshold: Threshold) -> bool:
    """Whether ``level`` lies strictly above the threshold."""
    if threshold is ThresholdSentinel.BELOW:
        return True
    if threshold is ThresholdSentinel.ABOVE:
        return False
    return level > threshold


def at_least_threshold(level: float, threshold: Threshold) -> bool:
    """Whether ``level`` lies at or above the threshold."""
    if threshold is ThresholdSentinel.BELOW:
        return True
    if threshold is ThresholdSentinel.ABOVE:
        return False
    return level >= threshold


def _check_alpha(pair: FunctionPair, alpha: float, name: str = "alpha") -> None:
    if not 0.0 <= alpha <= pair.alpha_cap:
        raise InvalidParameterError(
            f"{name} must lie in [0, {pair.alpha_cap}], got {alpha!r}"
        )


def reveal_benefit(
    dq: DerivedQuantities, pair: FunctionPair, member: Member, alpha: float
) -> float:
    """Left side of the FOC; strictly increasing in alpha for valid pairs."""
    d_own = dq.d(member)
    if d_own == 0.0:
        raise DegenerateMemberError(
            f"member {member} sits on the prior (d = 0); benefit undefined"
        )
    _check_alpha(pair, alpha)
    marginal = float(pair.cost_prime(alpha)) / float(pair.weight_prime(alpha))
    return float(pair.weight(alpha)) + (2.0 / (d_own * d_own)) * marginal


def invert_reveal_benefit(
    dq: DerivedQuantities, pair: FunctionPair, member: Member, target: float
) -> float:
    """Unique alpha in [0, alpha_cap) with reveal_benefit = target, by bisection."""
    at_zero = reveal_benefit(dq, pair, member, 0.0)
    if target < at_zero:
        raise NoRootError(
            f"target {target} below benefit at zero ({at_zero}); "
            "the zero branch applies"
        )
    return bisect_increasing(
        lambda a: reveal_benefit(dq, pair, member, a),
        target,
        0.0,
        pair.alpha_cap,
        tol=_INVERT_TOL,
    )


def strategic_impact(
    dq: DerivedQuantities, pair: FunctionPair, member: Member, alpha_other: float
) -> float:
    """Right side of the FOC: 2 - lambda(alpha_other) / kappa."""
    kappa = dq.kappa_for(member)
    if kappa is None or kappa == 0.0:
        raise DegenerateMemberError(
            "impact undefined: one member's diversity is zero"
        )
    _check_alpha(pair, alpha_other, "alpha_other")
    return 2.0 - float(pair.weight(alpha_other)) / kappa


def revelation_threshold(
    dq: DerivedQuantities, pair: FunctionPair, member: Member
) -> Threshold:
    """Opponent level at which this member starts or stops revealing.

    Evaluates x = 2/kappa_m - 2p/(d_A*d_B) and maps it through the weight
    inverse; arguments outside [0, 1) collapse to sentinels whose comparison
    semantics extend the threshold continuously.
    """
    d_own = dq.d(member)
    d_other = dq.d(other_member(member))
    if d_own == 0.0 or d_other == 0.0:
        raise DegenerateMemberError("threshold undefined: zero diversity")
    x = 2.0 * d_other / d_own - 2.0 * dq.trigger_price / (dq.d_A * dq.d_B)
    if x < 0.0:
        return ThresholdSentinel.BELOW
    if x >= 1.0:
        return ThresholdSentinel.ABOVE
    return pair.weight_inv(x)


@dataclass(frozen=True)
class BestResponseResult:
    alpha_star: float
    branch: Literal["zero", "reveal"]
    condition_trace: tuple[tuple[str, bool], ...]


def best_response(
    config: GameConfig,
    member: Member,
    alpha_other: float,
    dq: Optional[DerivedQuantities] = None,
) -> BestResponseResult:
    """Loss-minimizing revelation level for ``member`` given the opponent's.

    Implements the full case analysis. The threshold compared against the
    opponent's level is the opponent's own (their kappa orientation), and
    knife-edge ties follow the weak inequalities recorded in the trace.
    """
    pair = config.functions
    if dq is None:
        dq = derived_quantities(config)
    _check_alpha(pair, alpha_other, "alpha_other")

    trace: list[tuple[str, bool]] = []
    d_own = dq.d(member)
    d_other = dq.d(other_member(member))
    p = dq.trigger_price

    if d_own == 0.0:
        # Revealing cannot move the team decision toward a member who already
        # sits on the prior; it only costs.
        trace.append(("own_diversity_zero", True))
        return _zero_result(trace)

    d_sq = d_own * d_own

    if d_other == 0.0:
        # Opponent's representative always outputs the prior, so the impact
        # term is the constant 2 and only the own-price test remains.
        trace.append(("opponent_on_prior", True))
        reveals = d_sq > p
        trace.append(("reveal_if: d^2 > p", reveals))
        if not reveals:
            return _zero_result(trace)
        return _reveal_result(config, dq, member, alpha_other, trace)

    kappa = d_own / d_other
    if kappa < 0.0:
        trace.append(("conflicting: kappa < 0", True))
        reveal_always = d_sq >= p
        zero_always = d_sq * (1.0 - 1.0 / (2.0 * kappa)) <= p
        trace.append(("reveal_if: d^2 >= p", reveal_always))
        trace.append(("zero_if: d^2*(1-1/(2*kappa)) <= p", zero_always))
        if reveal_always:
            return _reveal_result(config, dq, member, alpha_other, trace)
        if zero_always:
            return _zero_result(trace)
        threshold = revelation_threshold(dq, pair, other_member(member))
        above = exceeds_threshold(alpha_other, threshold)
        trace.append(("middle: alpha_other > threshold_other", above))
        if above:
            return _reveal_result(config, dq, member, alpha_other, trace)
        return _zero_result(trace)

    trace.append(("aligned: kappa > 0", True))
    zero_always = d_sq <= p
    reveal_always = d_sq * (1.0 - 1.0 / (2.0 * kappa)) >= p
    trace.append(("zero_if: d^2 <= p", zero_always))
    trace.append(("reveal_if: d^2*(1-1/(2*kappa)) >= p", reveal_always))
    if zero_always:
        return _zero_result(trace)
    if reveal_always:
        return _reveal_result(config, dq, member, alpha_other, trace)
    threshold = revelation_threshold(dq, pair, other_member(member))
    above = exceeds_threshold(alpha_other, threshold)
    trace.append(("middle: alpha_other > threshold_other", above))
    if above:
        return _zero_result(trace)
    return _reveal_result(config, dq, member, alpha_other, trace)


def _zero_result(trace: list[tuple[str, bool]]) -> BestResponseResult:
    return BestResponseResult(
        alpha_star=0.0, branch="zero", condition_trace=tuple(trace)
    )


def _reveal_result(
    config: GameConfig,
    dq: DerivedQuantities,
    member: Member,
    alpha_other: float,
    trace: list[tuple[str, bool]],
) -> BestResponseResult:
    pair = config.functions
    if dq.d(other_member(member)) == 0.0:
        target = 2.0
    else:
        target = strategic_impact(dq, pair, member, alpha_other)
    at_zero = reveal_benefit(dq, pair, member, 0.0)
    if target <= at_zero:
        # Knife edge: the interior optimum collapses onto zero revelation,
        # where both branches coincide in loss.
        trace.append(("reveal_target_at_lower_bound", True))
        return _zero_result(trace)
    alpha = invert_reveal_benefit(dq, pair, member, target)
    return BestResponseResult(
        alpha_star=alpha, branch="reveal", condition_trace=tuple(trace)
    )
