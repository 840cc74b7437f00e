"""Shared constructors for the test suite."""

import revgame as rg

_PAIRS: dict[float, rg.FunctionPair] = {}


def linear_log(beta: float = 1.0) -> rg.FunctionPair:
    """Cache pairs so per-test validation does not rerun the grid checks."""
    key = float(beta)
    if key not in _PAIRS:
        _PAIRS[key] = rg.make_linear_log_pair(key)
    return _PAIRS[key]


def cfg(d_a, d_b, beta=1.0, mu=0.0, manual_cost=0.0) -> rg.GameConfig:
    """Config from diversities: theta sits at mu plus the diversity."""
    return rg.GameConfig(
        theta_A=mu + d_a,
        theta_B=mu + d_b,
        mu_G=mu,
        functions=linear_log(beta),
        manual_cost=manual_cost,
    )


def random_config(rng) -> rg.GameConfig:
    """The randomized family used across the oracle comparisons."""
    return rg.GameConfig(
        theta_A=float(rng.uniform(-5, 5)),
        theta_B=float(rng.uniform(-5, 5)),
        mu_G=float(rng.uniform(-2, 2)),
        functions=rg.make_linear_log_pair(float(rng.uniform(0.25, 4))),
    )
