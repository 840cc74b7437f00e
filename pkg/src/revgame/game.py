"""Game configuration, derived quantities, losses, and the manual baseline.

Two members A and B hold preferences ``theta_A`` and ``theta_B``; a shared
model prior sits at ``mu_G``. Each member picks a revelation level and is
represented by an agent whose expected output is

    rep_m = lambda(alpha_m) * theta_m + (1 - lambda(alpha_m)) * mu_G,

the team decides on the average of the two representative outputs, and a
member's loss is the squared distance to the team decision plus the
communication cost of revealing:

    L_m = (theta_m - theta_T)**2 + c(alpha_m).

The manual baseline has both members state their preferences exactly at a
per-member cost ``C``; the baseline team decision is the midpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Literal, Optional

from .errors import ConfigError, InvalidParameterError
from .functions import ALPHA_CAP, FunctionPair, make_linear_log_pair, trigger_price

Member = Literal["A", "B"]

MEMBERS: tuple[Member, Member] = ("A", "B")


def other_member(member: Member) -> Member:
    _check_member(member)
    return "B" if member == "A" else "A"


def _check_member(member) -> None:
    if member not in ("A", "B"):
        raise InvalidParameterError(f"member id must be 'A' or 'B', got {member!r}")


def _check_finite(name: str, value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidParameterError(f"{name} must be a real number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise InvalidParameterError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class GameConfig:
    """Immutable game instance: preferences, prior, functions, manual cost."""

    theta_A: float
    theta_B: float
    mu_G: float
    functions: FunctionPair
    manual_cost: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theta_A", _check_finite("theta_A", self.theta_A))
        object.__setattr__(self, "theta_B", _check_finite("theta_B", self.theta_B))
        object.__setattr__(self, "mu_G", _check_finite("mu_G", self.mu_G))
        cost = _check_finite("manual_cost", self.manual_cost)
        if cost < 0.0:
            raise InvalidParameterError(f"manual_cost must be >= 0, got {cost}")
        object.__setattr__(self, "manual_cost", cost)
        self.functions.ensure_valid()

    def theta(self, member: Member) -> float:
        _check_member(member)
        return self.theta_A if member == "A" else self.theta_B

    def diversity(self, member: Member) -> float:
        return self.theta(member) - self.mu_G


@dataclass(frozen=True)
class DerivedQuantities:
    """Directional diversities, their ratio, and the trigger price."""

    d_A: float
    d_B: float
    kappa: Optional[float]  # d_A / d_B; None when d_B = 0
    trigger_price: float

    def d(self, member: Member) -> float:
        _check_member(member)
        return self.d_A if member == "A" else self.d_B

    def kappa_for(self, member: Member) -> Optional[float]:
        """Deviation ratio d_m / d_{-m} oriented at ``member``; None if undefined."""
        d_own = self.d(member)
        d_other = self.d(other_member(member))
        if d_other == 0.0:
            return None
        return d_own / d_other


def derived_quantities(config: GameConfig) -> DerivedQuantities:
    d_a = config.theta_A - config.mu_G
    d_b = config.theta_B - config.mu_G
    kappa = d_a / d_b if d_b != 0.0 else None
    return DerivedQuantities(
        d_A=d_a, d_B=d_b, kappa=kappa, trigger_price=trigger_price(config.functions)
    )


@dataclass(frozen=True)
class RevelationProfile:
    """A strategy pair (alpha_A, alpha_B), each within [0, alpha_cap]."""

    alpha_A: float
    alpha_B: float

    def __post_init__(self):
        for name in ("alpha_A", "alpha_B"):
            value = _check_finite(name, getattr(self, name))
            if not 0.0 <= value <= ALPHA_CAP:
                raise InvalidParameterError(
                    f"{name} must lie in [0, {ALPHA_CAP}], got {value}"
                )
            object.__setattr__(self, name, value)

    def alpha(self, member: Member) -> float:
        _check_member(member)
        return self.alpha_A if member == "A" else self.alpha_B

    def with_alpha(self, member: Member, value: float) -> "RevelationProfile":
        _check_member(member)
        if member == "A":
            return replace(self, alpha_A=value)
        return replace(self, alpha_B=value)


def representative_mean(config: GameConfig, member: Member, alpha: float) -> float:
    """Expected representative output: a weighted mix of preference and prior."""
    lam = float(config.functions.weight(alpha))
    return lam * config.theta(member) + (1.0 - lam) * config.mu_G


def team_decision(config: GameConfig, profile: RevelationProfile) -> float:
    rep_a = representative_mean(config, "A", profile.alpha_A)
    rep_b = representative_mean(config, "B", profile.alpha_B)
    return 0.5 * (rep_a + rep_b)


def member_loss_parts(
    config: GameConfig, profile: RevelationProfile, member: Member
) -> tuple[float, float]:
    """(preference loss, communication cost) for one member at a profile."""
    gap = config.theta(member) - team_decision(config, profile)
    cost = float(config.functions.cost(profile.alpha(member)))
    return gap * gap, cost


def member_loss(config: GameConfig, profile: RevelationProfile, member: Member) -> float:
    preference, cost = member_loss_parts(config, profile, member)
    return preference + cost


@dataclass(frozen=True)
class LossBreakdown:
    preference: float
    cost: float
    total: float


def loss_breakdown(
    config: GameConfig, profile: RevelationProfile, member: Member
) -> LossBreakdown:
    preference, cost = member_loss_parts(config, profile, member)
    return LossBreakdown(preference=preference, cost=cost, total=preference + cost)


@dataclass(frozen=True)
class BaselineOutcomes:
    """Manual-participation outcomes: midpoint decision at per-member cost C."""

    theta_T: float
    e_T: float
    L_T: float
    e_A: float
    e_B: float


def baseline_outcomes(config: GameConfig) -> BaselineOutcomes:
    theta_t = 0.5 * (config.theta_A + config.theta_B)
    spread = config.theta_B - config.theta_A
    e_t = 0.5 * spread * spread
    per_member = 0.25 * spread * spread
    return BaselineOutcomes(
        theta_T=theta_t,
        e_T=e_t,
        L_T=e_t + 2.0 * config.manual_cost,
        e_A=per_member,
        e_B=per_member,
    )


# --- config file parsing -----------------------------------------------------

_NUMERIC_KEYS = ("theta_A", "theta_B", "mu_G", "beta", "manual_cost")
_KNOWN_KEYS = _NUMERIC_KEYS + ("functions",)
_REQUIRED_KEYS = ("theta_A", "theta_B")
_DEFAULTS = {"mu_G": 0.0, "beta": 1.0, "manual_cost": 0.0, "functions": "linear-log"}


def parse_config_text(text: str, source: str = "<config>") -> tuple[GameConfig, list[str]]:
    """Parse line-oriented ``key = value`` config text.

    Returns the config plus a list of warnings (unknown or duplicate keys).
    Raises :class:`ConfigError` naming the offending key and line on malformed
    or out-of-domain values.
    """
    values: dict[str, str] = {}
    lines: dict[str, int] = {}
    warnings: list[str] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(
                f"{source}: line {line_no}: expected 'key = value', got {raw!r}",
                line_no=line_no,
            )
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _KNOWN_KEYS:
            warnings.append(f"{source}: line {line_no}: unknown key {key!r} ignored")
            continue
        if key in values:
            warnings.append(
                f"{source}: line {line_no}: duplicate key {key!r} overrides line {lines[key]}"
            )
        values[key] = value
        lines[key] = line_no

    for key in _REQUIRED_KEYS:
        if key not in values:
            raise ConfigError(f"{source}: missing required key {key!r}", key=key)

    parsed: dict[str, float] = {}
    for key in _NUMERIC_KEYS:
        if key not in values:
            if key in _DEFAULTS:
                parsed[key] = float(_DEFAULTS[key])
            continue
        try:
            parsed[key] = float(values[key])
        except ValueError:
            raise ConfigError(
                f"{source}: line {lines[key]}: invalid number for {key}: {values[key]!r}",
                key=key,
                line_no=lines[key],
            ) from None
        if not math.isfinite(parsed[key]):
            raise ConfigError(
                f"{source}: line {lines[key]}: {key} must be finite, got {values[key]!r}",
                key=key,
                line_no=lines[key],
            )

    family = values.get("functions", _DEFAULTS["functions"])
    if family != "linear-log":
        raise ConfigError(
            f"{source}: line {lines.get('functions', 0)}: unsupported functions "
            f"family {family!r} (only 'linear-log' is available from config files)",
            key="functions",
            line_no=lines.get("functions"),
        )
    if parsed["beta"] <= 0.0:
        raise ConfigError(
            f"{source}: line {lines.get('beta', 0)}: beta must be positive, "
            f"got {parsed['beta']}",
            key="beta",
            line_no=lines.get("beta"),
        )
    if parsed["manual_cost"] < 0.0:
        raise ConfigError(
            f"{source}: line {lines.get('manual_cost', 0)}: manual_cost must be "
            f">= 0, got {parsed['manual_cost']}",
            key="manual_cost",
            line_no=lines.get("manual_cost"),
        )

    config = GameConfig(
        theta_A=parsed["theta_A"],
        theta_B=parsed["theta_B"],
        mu_G=parsed["mu_G"],
        functions=make_linear_log_pair(parsed["beta"]),
        manual_cost=parsed["manual_cost"],
    )
    return config, warnings


def load_config_file(path) -> tuple[GameConfig, list[str]]:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return parse_config_text(text, source=str(path))
