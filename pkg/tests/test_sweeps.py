import numpy as np
import pytest

import revgame as rg
from revgame.sweeps import (
    REGION_COLUMNS,
    apply_sweep_value,
    build_figure,
    format_cell,
    region_rows,
    run_sweep,
    sweep_fieldnames,
    write_csv,
)

from helpers import cfg, linear_log


def base():
    return cfg(3.0, 0.0)


class TestSweepSpec:
    def test_values_are_inclusive_linspace(self):
        spec = rg.SweepSpec("d_B", -1.0, 1.0, 5)
        assert spec.values().tolist() == [-1.0, -0.5, 0.0, 0.5, 1.0]

    def test_unknown_parameter(self):
        with pytest.raises(rg.InvalidParameterError):
            rg.SweepSpec("gamma", 0.0, 1.0)

    def test_reversed_range(self):
        with pytest.raises(rg.InvalidParameterError):
            rg.SweepSpec("d_B", 1.0, -1.0)

    def test_too_few_points(self):
        with pytest.raises(rg.InvalidParameterError):
            rg.SweepSpec("d_B", 0.0, 1.0, points=1)


class TestApply:
    def test_diversity_moves_theta_relative_to_prior(self):
        config = cfg(3.0, 0.0, mu=2.0)
        swept = apply_sweep_value(config, "d_B", -1.5)
        assert swept.theta_B == pytest.approx(0.5)  # mu + value
        assert swept.theta_A == config.theta_A

    def test_beta_rebuilds_the_pair(self):
        swept = apply_sweep_value(base(), "beta", 2.5)
        assert swept.functions.beta == 2.5
        assert swept.functions.family == "linear-log"

    def test_beta_sweep_requires_linear_log(self):
        pair = rg.FunctionPair(
            weight=lambda a: a,
            weight_prime=lambda a: 1.0 + 0.0 * a,
            cost=lambda a: a * a / (1.0 - a),
            cost_prime=lambda a: (2.0 * a - a * a) / (1.0 - a) ** 2,
            label="rational",
        )
        config = rg.GameConfig(theta_A=3.0, theta_B=0.0, mu_G=0.0, functions=pair)
        with pytest.raises(rg.InvalidParameterError):
            apply_sweep_value(config, "beta", 2.0)

    def test_manual_cost(self):
        swept = apply_sweep_value(base(), "manual_cost", 1.25)
        assert swept.manual_cost == 1.25


def test_run_sweep_rows():
    spec = rg.SweepSpec("d_B", -3.0, 3.0, 7)
    rows = run_sweep(base(), spec)
    assert len(rows) == 7
    assert [row["d_B"] for row in rows] == [-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0]
    assert all(row["status"] == "ok" for row in rows)
    fields = sweep_fieldnames(spec)
    assert fields[0] == "d_B"
    for row in rows:
        assert set(row) == set(fields)
    # the symmetric conflict point is in there with its known levels
    row = rows[0]
    assert row["kind"] == "BPR-Conflicting"
    assert row["alpha_A_star"] == pytest.approx(8.0 / 9.0, abs=1e-8)


def test_format_cell():
    assert format_cell(0.5555555555555) == "0.555555556"
    assert format_cell(3.0) == "3"
    assert format_cell("ok") == "ok"
    with pytest.raises(rg.InvalidParameterError):
        format_cell(None)
    with pytest.raises(rg.InvalidParameterError):
        format_cell(True)


def test_write_csv_deterministic(tmp_path):
    spec = rg.SweepSpec("d_B", -2.0, 2.0, 9)
    rows = run_sweep(base(), spec)
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    write_csv(first, sweep_fieldnames(spec), rows)
    write_csv(second, sweep_fieldnames(spec), run_sweep(base(), spec))
    assert first.read_bytes() == second.read_bytes()


def test_write_csv_uses_bare_newlines(tmp_path):
    path = tmp_path / "rows.csv"
    write_csv(path, ("x", "status"), [{"x": 1.0, "status": "ok"}])
    data = path.read_bytes()
    assert b"\r" not in data
    assert data == b"x,status\n1,ok\n"


class TestRegions:
    def test_corner_kinds(self):
        rows = region_rows(lo=-5.0, hi=5.0, points=3)
        by_cell = {(row["d_A"], row["d_B"]): row["kind"] for row in rows}
        assert by_cell[(-5.0, -5.0)] == "BPR-Aligned"
        assert by_cell[(5.0, -5.0)] == "BPR-Conflicting"
        assert by_cell[(0.0, 0.0)] == "NR"
        assert by_cell[(5.0, 0.0)] == "OPR-A"
        assert by_cell[(0.0, 5.0)] == "OPR-B"

    def test_member_exchange_symmetry(self):
        rows = region_rows(lo=-4.0, hi=4.0, points=17)
        by_cell = {(row["d_A"], row["d_B"]): row["kind"] for row in rows}
        swap = {"OPR-A": "OPR-B", "OPR-B": "OPR-A"}
        for (d_a, d_b), kind in by_cell.items():
            mirrored = by_cell[(d_b, d_a)]
            assert mirrored == swap.get(kind, kind), (d_a, d_b)

    def test_cell_limit(self):
        with pytest.raises(rg.InvalidParameterError):
            region_rows(points=2100)

    def test_custom_pair_is_used(self):
        rows = region_rows(lo=-1.5, hi=1.5, points=3, functions=linear_log(4.0))
        by_cell = {(row["d_A"], row["d_B"]): row["kind"] for row in rows}
        # price 4 silences everyone on this small square
        assert set(by_cell.values()) == {"NR"}


class TestFigures:
    def test_registry_contents(self):
        assert set(rg.FIGURES) == {"fig3", "fig4", "fig5", "fig6", "fig7", "fig8"}
        for recipe in rg.FIGURES.values():
            assert recipe.description

    def test_unknown_figure(self, tmp_path):
        with pytest.raises(rg.InvalidParameterError):
            build_figure("fig99", tmp_path)

    def test_fig3_small(self, tmp_path):
        written = build_figure("fig3", tmp_path, points=11)
        assert [p.name for p in written] == ["fig3.csv"]
        lines = written[0].read_text(encoding="utf-8").splitlines()
        assert lines[0].startswith("d_B,alpha_A_star,alpha_B_star,kind")
        assert len(lines) == 12

    def test_fig4_small(self, tmp_path):
        written = build_figure("fig4", tmp_path, points=5)
        text = written[0].read_text(encoding="utf-8")
        assert text.startswith("d_A,d_B,decision_gap,kind,status")
        assert text.count("\n") == 26  # header plus 25 cells

    def test_fig5_writes_both_baselines(self, tmp_path):
        written = build_figure("fig5", tmp_path, points=5)
        names = sorted(p.name for p in written)
        assert names == ["fig5_dA_-0.5.csv", "fig5_dA_3.csv"]

    def test_fig8_writes_three_betas(self, tmp_path):
        written = build_figure("fig8", tmp_path, points=5)
        names = sorted(p.name for p in written)
        assert names == [
            "fig8_beta_0.5.csv",
            "fig8_beta_1.csv",
            "fig8_beta_2.csv",
        ]

    def test_region_columns_are_stable(self):
        assert REGION_COLUMNS == ("d_A", "d_B", "kind")
