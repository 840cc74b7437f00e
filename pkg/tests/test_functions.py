import math

import numpy as np
import pytest

import revgame as rg
from revgame.functions import bisect_increasing, validate_function_pair

from helpers import linear_log


def test_bisect_finds_square_root():
    root = bisect_increasing(lambda x: x * x, 2.0, 0.0, 2.0, tol=1e-12)
    assert root == pytest.approx(math.sqrt(2.0), abs=1e-11)


def test_bisect_hits_bracket_endpoints_exactly():
    assert bisect_increasing(lambda x: x, 0.0, 0.0, 1.0) == 0.0
    assert bisect_increasing(lambda x: x, 1.0, 0.0, 1.0) == 1.0


def test_bisect_target_outside_range():
    with pytest.raises(rg.NoRootError):
        bisect_increasing(lambda x: x, 2.0, 0.0, 1.0)
    with pytest.raises(rg.NoRootError):
        bisect_increasing(lambda x: x, -0.5, 0.0, 1.0)


def test_bisect_rejects_empty_bracket():
    with pytest.raises(rg.InvalidParameterError):
        bisect_increasing(lambda x: x, 0.5, 1.0, 0.0)


@pytest.mark.parametrize("beta", [0.25, 1.0, 4.0])
def test_linear_log_pair_validates(beta):
    pair = rg.make_linear_log_pair(beta)
    report = validate_function_pair(pair)
    assert report.ok, [c.name for c in report.checks if not c.passed]


@pytest.mark.parametrize("bad", [0.0, -1.0, float("nan"), float("inf"), True])
def test_linear_log_pair_rejects_bad_beta(bad):
    with pytest.raises(rg.InvalidParameterError):
        rg.make_linear_log_pair(bad)


def test_trigger_price_is_beta_for_linear_log():
    # c'(0)/lambda'(0) = beta/1
    assert rg.trigger_price(linear_log(1.0)) == pytest.approx(1.0)
    assert rg.trigger_price(linear_log(0.5)) == pytest.approx(0.5)


def test_weight_inverse_roundtrip():
    pair = linear_log(2.0)
    for w in (0.0, 0.25, 0.5, 0.999):
        assert pair.weight_inv(w) == pytest.approx(w, abs=1e-9)
    with pytest.raises(rg.InvalidParameterError):
        pair.weight_inv(1.5)


def test_weight_inverse_by_bisection_when_no_analytic_form():
    pair = rg.FunctionPair(
        weight=lambda a: np.sqrt(a),
        weight_prime=lambda a: 0.5 / np.sqrt(a) if np.ndim(a) == 0 else 0.5 / np.sqrt(a),
        cost=lambda a: a * a,
        cost_prime=lambda a: 2.0 * a,
        label="sqrt-quadratic",
    )
    assert pair.weight_inv(0.5) == pytest.approx(0.25, abs=1e-9)


def test_validation_catches_decreasing_weight():
    pair = rg.FunctionPair(
        weight=lambda a: 1.0 - a,
        weight_prime=lambda a: -1.0 + 0.0 * a,
        cost=lambda a: -np.log1p(-a),
        cost_prime=lambda a: 1.0 / (1.0 - a),
        label="broken",
    )
    report = validate_function_pair(pair)
    assert not report.ok
    assert not report.check("weight_increasing").passed


def test_validation_catches_wrong_derivative():
    pair = rg.FunctionPair(
        weight=lambda a: a,
        weight_prime=lambda a: 2.0 + 0.0 * a,  # claims double the true slope
        cost=lambda a: -np.log1p(-a),
        cost_prime=lambda a: 1.0 / (1.0 - a),
        label="bad-slope",
    )
    report = validate_function_pair(pair)
    assert not report.check("weight_derivative").passed


def test_ensure_valid_raises_with_report_attached():
    pair = rg.FunctionPair(
        weight=lambda a: a,
        weight_prime=lambda a: 1.0 + 0.0 * a,
        cost=lambda a: -(a * a),  # decreasing cost
        cost_prime=lambda a: -2.0 * a,
        label="negative-cost",
    )
    with pytest.raises(rg.FunctionPairError) as exc_info:
        pair.ensure_valid()
    assert exc_info.value.report is not None
    assert not exc_info.value.report.ok


def test_ensure_valid_caches_the_report():
    pair = rg.make_linear_log_pair(3.0)
    first = pair.ensure_valid()
    assert pair.ensure_valid() is first


def test_alpha_cap_is_just_under_one():
    assert 0.0 < rg.ALPHA_CAP < 1.0
    assert 1.0 - rg.ALPHA_CAP < 1e-8
