import math

import pytest

import revgame as rg

from helpers import cfg, linear_log


def test_config_rejects_non_finite_theta():
    with pytest.raises(rg.InvalidParameterError):
        rg.GameConfig(
            theta_A=float("nan"), theta_B=0.0, mu_G=0.0, functions=linear_log()
        )


def test_config_rejects_negative_manual_cost():
    with pytest.raises(rg.InvalidParameterError):
        cfg(1.0, 1.0, manual_cost=-0.1)


def test_derived_quantities():
    dq = rg.derived_quantities(cfg(3.0, -3.0, mu=1.0))
    assert dq.d_A == pytest.approx(3.0)
    assert dq.d_B == pytest.approx(-3.0)
    assert dq.kappa == pytest.approx(-1.0)
    assert dq.trigger_price == pytest.approx(1.0)
    assert dq.kappa_for("A") == pytest.approx(-1.0)
    assert dq.kappa_for("B") == pytest.approx(-1.0)


def test_kappa_none_when_other_member_on_prior():
    dq = rg.derived_quantities(cfg(2.0, 0.0))
    assert dq.kappa is None
    assert dq.kappa_for("A") is None
    assert dq.kappa_for("B") == pytest.approx(0.0)


def test_profile_validates_levels():
    with pytest.raises(rg.InvalidParameterError):
        rg.RevelationProfile(alpha_A=-0.1, alpha_B=0.0)
    with pytest.raises(rg.InvalidParameterError):
        rg.RevelationProfile(alpha_A=0.0, alpha_B=1.0)


def test_profile_with_alpha():
    profile = rg.RevelationProfile(alpha_A=0.2, alpha_B=0.3)
    bumped = profile.with_alpha("B", 0.5)
    assert bumped.alpha_A == 0.2
    assert bumped.alpha_B == 0.5
    assert profile.alpha_B == 0.3  # original untouched


def test_representative_interpolates_between_prior_and_preference():
    config = cfg(4.0, 1.0, mu=1.0)
    assert rg.game.representative_mean(config, "A", 0.0) == pytest.approx(1.0)
    near_full = rg.game.representative_mean(config, "A", rg.ALPHA_CAP)
    assert near_full == pytest.approx(5.0, abs=1e-6)


def test_team_decision_is_mean_of_representatives():
    config = cfg(3.0, -1.0)
    profile = rg.RevelationProfile(alpha_A=0.5, alpha_B=0.25)
    expected = 0.5 * (0.5 * 3.0 + 0.25 * -1.0)
    assert rg.team_decision(config, profile) == pytest.approx(expected)


def test_loss_parts_sum_exactly():
    config = cfg(3.0, -0.7)
    profile = rg.RevelationProfile(alpha_A=0.81, alpha_B=0.22)
    for member in ("A", "B"):
        breakdown = rg.loss_breakdown(config, profile, member)
        assert breakdown.preference + breakdown.cost == breakdown.total
        assert breakdown.total == rg.member_loss(config, profile, member)


def test_baseline_outcomes():
    base = rg.baseline_outcomes(cfg(3.0, -3.0, manual_cost=0.5))
    assert base.theta_T == pytest.approx(0.0)
    assert base.e_T == pytest.approx(18.0)
    assert base.e_A == pytest.approx(9.0)
    assert base.e_B == pytest.approx(9.0)
    assert base.L_T == pytest.approx(19.0)


def test_baseline_midpoint_off_prior():
    base = rg.baseline_outcomes(cfg(1.0, 2.0, mu=10.0))
    # thetas are 11 and 12; the baseline ignores the prior entirely
    assert base.theta_T == pytest.approx(11.5)
    assert base.e_T == pytest.approx(0.5)


class TestConfigParsing:
    def test_happy_path(self):
        text = "\n".join(
            [
                "# sample",
                "theta_A = 3.0",
                "theta_B = -3.0",
                "mu_G = 0.5",
                "beta = 2.0",
                "manual_cost = 0.25",
                "functions = linear-log",
            ]
        )
        config, warnings = rg.parse_config_text(text)
        assert warnings == []
        assert config.theta_A == 3.0
        assert config.theta_B == -3.0
        assert config.mu_G == 0.5
        assert config.manual_cost == 0.25
        assert config.functions.beta == 2.0

    def test_defaults(self):
        config, _ = rg.parse_config_text("theta_A = 1\ntheta_B = 2\n")
        assert config.mu_G == 0.0
        assert config.manual_cost == 0.0
        assert config.functions.family == "linear-log"
        assert config.functions.beta == 1.0

    def test_unknown_key_warns(self):
        _, warnings = rg.parse_config_text("theta_A=1\ntheta_B=2\ncolor=red\n")
        assert len(warnings) == 1
        assert "color" in warnings[0]
        assert "ignored" in warnings[0]

    def test_duplicate_key_warns(self):
        _, warnings = rg.parse_config_text("theta_A=1\ntheta_B=2\ntheta_A=4\n")
        assert any("theta_A" in w and "overrides" in w for w in warnings)

    def test_missing_required_key(self):
        with pytest.raises(rg.ConfigError):
            rg.parse_config_text("theta_A = 1\n")

    def test_bad_float_reports_key_and_line(self):
        with pytest.raises(rg.ConfigError) as exc_info:
            rg.parse_config_text("theta_A = 1\ntheta_B = banana\n")
        assert "theta_B" in str(exc_info.value)
        assert exc_info.value.line_no == 2

    def test_line_without_equals(self):
        with pytest.raises(rg.ConfigError):
            rg.parse_config_text("theta_A 1\ntheta_B = 2\n")

    def test_non_finite_value(self):
        with pytest.raises(rg.ConfigError):
            rg.parse_config_text("theta_A = inf\ntheta_B = 2\n")

    def test_unknown_function_family(self):
        with pytest.raises(rg.ConfigError):
            rg.parse_config_text("theta_A=1\ntheta_B=2\nfunctions=cubic\n")

    def test_nonpositive_beta(self):
        with pytest.raises(rg.ConfigError):
            rg.parse_config_text("theta_A=1\ntheta_B=2\nbeta=0\n")

    def test_load_config_file(self, tmp_path):
        path = tmp_path / "game.cfg"
        path.write_text("theta_A = 3\ntheta_B = 0.5\n", encoding="utf-8")
        config, warnings = rg.load_config_file(path)
        assert warnings == []
        assert config.theta_A == 3.0
        assert math.isclose(config.theta_B, 0.5)
