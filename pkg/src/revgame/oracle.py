"""Exhaustive grid-search cross-check for the closed-form solver.

Everything here works from the loss function alone: no threshold algebra,
no first-order conditions, no branch tables. A best response is the argmin
of the loss over a dense grid of revelation levels, and an equilibrium is a
profile that alternating grid best responses cannot leave. Agreement with
the analytic solver (up to grid resolution) is therefore evidence for the
case analysis, not a restatement of it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, OracleError
from .functions import ALPHA_CAP
from .game import (
    GameConfig,
    Member,
    MEMBERS,
    RevelationProfile,
    member_loss,
    other_member,
)


def deviation_levels(step: float, upper: float) -> np.ndarray:
    """All multiples of ``step`` below ``upper``, with ``upper`` appended."""
    if not 0.0 < step < 1.0:
        raise InvalidParameterError(f"step must lie in (0, 1), got {step!r}")
    if not 0.0 < upper < 1.0:
        raise InvalidParameterError(f"upper must lie in (0, 1), got {upper!r}")
    if step >= upper:
        raise InvalidParameterError("step must be smaller than upper")
    count = int(math.floor(upper / step))
    levels = np.arange(count + 1, dtype=float) * step
    levels = levels[levels < upper]
    return np.append(levels, upper)


@dataclass(frozen=True)
class GridSpec:
    """Search grid for the oracle: multiples of ``step`` up to ``upper``."""

    step: float = 1e-4
    upper: float = ALPHA_CAP

    def __post_init__(self) -> None:
        if not 0.0 < self.step <= 0.01:
            raise InvalidParameterError(
                f"grid step must lie in (0, 0.01], got {self.step!r}"
            )
        if not 0.0 < self.upper < 1.0:
            raise InvalidParameterError(
                f"grid upper must lie in (0, 1), got {self.upper!r}"
            )
        if self.step >= self.upper:
            raise InvalidParameterError("grid step must be smaller than upper")

    def levels(self) -> np.ndarray:
        return deviation_levels(self.step, self.upper)


def loss_grid(
    config: GameConfig,
    member: Member,
    alphas: np.ndarray,
    alpha_other: float,
) -> np.ndarray:
    """Member's loss at each own level in ``alphas``, opponent held fixed.

    Fast path assumes the function pair accepts numpy arrays (the built-in
    family does); anything that breaks that assumption falls back to a
    scalar loop through ``member_loss``, so results never depend on the
    vectorization. A test pins the two paths to exact pointwise equality.
    """
    alphas = np.asarray(alphas, dtype=float)
    pair = config.functions
    theta_m = config.theta(member)
    opponent = other_member(member)
    try:
        lam = np.asarray(pair.weight(alphas), dtype=float)
        cost = np.asarray(pair.cost(alphas), dtype=float)
        if lam.shape != alphas.shape or cost.shape != alphas.shape:
            raise TypeError("function pair did not broadcast")
    except Exception:
        out = np.empty(alphas.shape, dtype=float)
        for i, alpha in enumerate(alphas):
            if member == "A":
                profile = RevelationProfile(alpha_A=float(alpha), alpha_B=alpha_other)
            else:
                profile = RevelationProfile(alpha_A=alpha_other, alpha_B=float(alpha))
            out[i] = member_loss(config, profile, member)
        return out
    rep_own = lam * theta_m + (1.0 - lam) * config.mu_G
    lam_other = float(pair.weight(alpha_other))
    rep_other = lam_other * config.theta(opponent) + (1.0 - lam_other) * config.mu_G
    gap = theta_m - 0.5 * (rep_own + rep_other)
    return gap * gap + cost


def brute_force_best_response(
    config: GameConfig,
    member: Member,
    alpha_other: float,
    grid: GridSpec = GridSpec(),
) -> float:
    """Grid argmin of the member's loss; ties go to the smaller level."""
    levels = grid.levels()
    losses = loss_grid(config, member, levels, alpha_other)
    return float(levels[int(np.argmin(losses))])


def brute_force_equilibrium(
    config: GameConfig,
    grid: GridSpec = GridSpec(),
    max_rounds: int = 500,
) -> tuple[RevelationProfile, int]:
    """Alternate grid best responses from (0, 0) until the profile repeats.

    Returns the fixed profile and the number of full rounds taken. Raises
    OracleError carrying the trailing profiles when no fixed point is hit,
    which would indicate either a grid-resolution cycle or a genuine failure
    of the game's contraction property.
    """
    levels = {m: 0.0 for m in MEMBERS}
    tail: list[tuple[float, float]] = []
    for rounds in range(1, max_rounds + 1):
        changed = False
        for m in MEMBERS:
            new = brute_force_best_response(config, m, levels[other_member(m)], grid)
            if new != levels[m]:
                changed = True
            levels[m] = new
        tail.append((levels["A"], levels["B"]))
        if len(tail) > 8:
            del tail[0]
        if not changed:
            profile = RevelationProfile(alpha_A=levels["A"], alpha_B=levels["B"])
            return profile, rounds
    raise OracleError(
        f"grid best responses did not settle in {max_rounds} rounds",
        tail=tuple(tail),
    )
