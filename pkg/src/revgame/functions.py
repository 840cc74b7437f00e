"""Weight and cost primitives of the revelation game.

A member who reveals a share ``alpha`` of their private preference signal is
represented by an agent whose expected output mixes the member's true
preference with the shared prior through a weight ``lambda(alpha)``; revealing
costs ``c(alpha)``. Admissible pairs satisfy the model's shape assumptions:

* weight: ``lambda(0) = 0``, ``lambda(1) = 1``, strictly increasing, concave;
* cost: ``c(0) = 0``, strictly increasing, convex, diverging as ``alpha -> 1``.

The built-in family is the linear weight with logarithmic cost,
``lambda(alpha) = alpha`` and ``c(alpha) = -beta * ln(1 - alpha)``, whose
trigger price ``c'(0) / lambda'(0)`` equals ``beta``.

Because the cost diverges at full revelation, every evaluation and search is
capped at ``alpha_cap`` (default ``1 - 1e-9``); equilibria are interior, so
the cap never binds at tolerance-level accuracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Optional

import numpy as np

from .errors import FunctionPairError, InvalidParameterError, NoRootError

ALPHA_CAP = 1.0 - 1e-9

# Central-difference step and tolerance for derivative agreement checks.
FD_STEP = 1e-5
FD_RTOL = 1e-6


def bisect_increasing(
    fn: Callable[[float], float],
    target: float,
    lo: float,
    hi: float,
    tol: float = 1e-10,
    max_iter: int = 200,
) -> float:
    """Invert a strictly increasing scalar function by bisection.

    Returns ``alpha`` in ``[lo, hi]`` with ``fn(alpha) = target`` to within
    ``tol`` on the argument. Raises :class:`NoRootError` when the target lies
    outside ``[fn(lo), fn(hi)]``.
    """
    if not lo < hi:
        raise InvalidParameterError(f"empty bracket [{lo}, {hi}]")
    f_lo = float(fn(lo))
    f_hi = float(fn(hi))
    if target < f_lo or target > f_hi:
        raise NoRootError(
            f"target {target!r} outside attainable range [{f_lo!r}, {f_hi!r}]"
        )
    if target == f_lo:
        return lo
    if target == f_hi:
        return hi
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # interval is at float resolution
        if float(fn(mid)) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)


@dataclass(frozen=True, eq=False)
class FunctionPair:
    """A weight/cost pair with first derivatives and the weight inverse.

    ``weight_inverse`` may be omitted; inversion then falls back to bisection
    on [0, 1] at tolerance 1e-12. Instances are immutable and safe to share
    across workers.
    """

    weight: Callable[[float], float]
    weight_prime: Callable[[float], float]
    cost: Callable[[float], float]
    cost_prime: Callable[[float], float]
    weight_inverse: Optional[Callable[[float], float]] = None
    alpha_cap: float = ALPHA_CAP
    label: str = "custom"
    family: str = "custom"
    beta: Optional[float] = None

    def __post_init__(self):
        if not 0.0 < self.alpha_cap < 1.0:
            raise InvalidParameterError(
                f"alpha_cap must lie in (0, 1), got {self.alpha_cap!r}"
            )

    def weight_inv(self, w: float) -> float:
        """Invert the weight function (analytic inverse when available)."""
        if not 0.0 <= w <= 1.0:
            raise InvalidParameterError(f"weight value {w!r} outside [0, 1]")
        if self.weight_inverse is not None:
            return float(self.weight_inverse(w))
        return bisect_increasing(self.weight, w, 0.0, 1.0, tol=1e-12)

    def ensure_valid(self, grid_points: int = 64) -> "ValidationReport":
        """Validate once and cache; raise FunctionPairError on failure."""
        report = getattr(self, "_validation_report", None)
        if report is None:
            report = validate_function_pair(self, grid_points)
            object.__setattr__(self, "_validation_report", report)
        if not report.ok:
            failed = ", ".join(c.name for c in report.checks if not c.passed)
            raise FunctionPairError(
                f"function pair {self.label!r} failed validation: {failed}",
                report=report,
            )
        return report


def _identity(alpha):
    return alpha


def _one(_alpha):
    return 1.0


def _log_cost(beta, alpha):
    # log1p keeps precision when alpha is close to 1
    return -beta * np.log1p(-alpha)


def _log_cost_prime(beta, alpha):
    return beta / (1.0 - alpha)


def make_linear_log_pair(beta: float) -> FunctionPair:
    """Build the linear-weight / logarithmic-cost pair for a given beta."""
    if isinstance(beta, bool) or not isinstance(beta, (int, float)):
        raise InvalidParameterError(f"beta must be a real number, got {beta!r}")
    beta = float(beta)
    if not math.isfinite(beta) or beta <= 0.0:
        raise InvalidParameterError(f"beta must be positive and finite, got {beta!r}")
    return FunctionPair(
        weight=_identity,
        weight_prime=_one,
        cost=partial(_log_cost, beta),
        cost_prime=partial(_log_cost_prime, beta),
        weight_inverse=_identity,
        label=f"linear-log, beta={beta:g}",
        family="linear-log",
        beta=beta,
    )


def trigger_price(pair: FunctionPair) -> float:
    """Marginal cost-benefit ratio at zero revelation, c'(0) / lambda'(0)."""
    slope = float(pair.weight_prime(0.0))
    if slope <= 0.0:
        raise FunctionPairError(
            f"weight slope at zero must be positive, got {slope!r}"
        )
    return float(pair.cost_prime(0.0)) / slope


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float  # worst violation magnitude (0 when clean)


@dataclass(frozen=True)
class ValidationReport:
    label: str
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _central_diff(fn, x, h=FD_STEP):
    return (float(fn(x + h)) - float(fn(x - h))) / (2.0 * h)


def validate_function_pair(pair: FunctionPair, grid_points: int = 128) -> ValidationReport:
    """Check the shape assumptions on a uniform grid; never raises on failure.

    Derivative agreement is checked by central differences (step ``FD_STEP``,
    relative tolerance ``FD_RTOL`` with a unit floor) on interior grid points;
    the cost derivative check stops at 0.98 where finite differences of a
    diverging function are still trustworthy at that step.
    """
    if grid_points < 16:
        raise InvalidParameterError(f"grid_points must be >= 16, got {grid_points}")

    checks: list[CheckResult] = []

    def add(name, passed, worst=0.0):
        checks.append(CheckResult(name, bool(passed), float(worst)))

    w_grid = np.linspace(0.0, 1.0, grid_points)
    w_vals = np.array([float(pair.weight(a)) for a in w_grid])

    end_err = max(abs(w_vals[0]), abs(w_vals[-1] - 1.0))
    add("weight_endpoints", end_err <= 1e-12, end_err)

    w_diffs = np.diff(w_vals)
    add("weight_increasing", np.all(w_diffs > 0.0), max(0.0, -w_diffs.min(initial=0.0)))

    w_second = np.diff(w_vals, n=2)
    worst_convexity = max(0.0, w_second.max(initial=0.0))
    add("weight_concave", worst_convexity <= 1e-8, worst_convexity)

    interior = w_grid[(w_grid >= 2 * FD_STEP) & (w_grid <= 1.0 - 2 * FD_STEP)]
    worst = 0.0
    for a in interior:
        analytic = float(pair.weight_prime(a))
        fd = _central_diff(pair.weight, a)
        worst = max(worst, abs(fd - analytic) / max(1.0, abs(analytic)))
    add("weight_derivative", worst <= FD_RTOL, worst)

    slope_vals = [float(pair.weight_prime(a)) for a in interior]
    min_slope = min(slope_vals) if slope_vals else 0.0
    add("weight_slope_positive", min_slope > 0.0, max(0.0, -min_slope))

    worst = 0.0
    invertible = True
    for a in w_grid:
        try:
            worst = max(worst, abs(pair.weight_inv(float(pair.weight(a))) - a))
        except (NoRootError, InvalidParameterError):
            # broken weights (non-monotone, outside [0, 1]) defeat inversion
            invertible = False
            worst = math.inf
            break
    add("weight_inverse_roundtrip", invertible and worst <= 1e-9, worst)

    c_grid = np.linspace(0.0, pair.alpha_cap, grid_points)
    c_vals = np.array([float(pair.cost(a)) for a in c_grid])

    zero_err = abs(c_vals[0])
    add("cost_at_zero", zero_err <= 1e-12, zero_err)

    c_diffs = np.diff(c_vals)
    add("cost_increasing", np.all(c_diffs > 0.0), max(0.0, -c_diffs.min(initial=0.0)))

    c_second = np.diff(c_vals, n=2)
    worst_concavity = max(0.0, -c_second.min(initial=0.0))
    add("cost_convex", worst_concavity <= 1e-8, worst_concavity)

    worst = 0.0
    for a in c_grid:
        if not 2 * FD_STEP <= a <= 0.98:
            continue
        analytic = float(pair.cost_prime(a))
        fd = _central_diff(pair.cost, a)
        worst = max(worst, abs(fd - analytic) / max(1.0, abs(analytic)))
    add("cost_derivative", worst <= FD_RTOL, worst)

    # Divergence proxy: compare the cap value against the geometric midpoint
    # in (1 - alpha); a cost that stays bounded near 1 barely grows past it.
    probe = 1.0 - math.sqrt(1.0 - pair.alpha_cap)
    cost_cap = float(pair.cost(pair.alpha_cap))
    cost_probe = float(pair.cost(probe))
    diverges = cost_cap > 0.0 and cost_cap >= 1.5 * cost_probe
    add("cost_diverges", diverges, 0.0 if diverges else cost_cap - 1.5 * cost_probe)

    slopes = np.array([float(pair.weight_prime(a)) for a in c_grid])
    if np.all(slopes > 0.0):
        ratio = np.array([float(pair.cost_prime(a)) for a in c_grid]) / slopes
        r_diffs = np.diff(ratio)
        increasing = np.all(r_diffs > -1e-10) and ratio[-1] > ratio[0]
        add("ratio_increasing", increasing, max(0.0, -r_diffs.min(initial=0.0)))
    else:
        add("ratio_increasing", False, float(-slopes.min()))

    return ValidationReport(label=pair.label, checks=tuple(checks))
