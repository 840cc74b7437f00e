"""Parameter sweeps, region maps, and the bundled figure reconstructions.

A sweep varies one scalar knob across a linspace, solves every point, and
emits one flat row per point; failures at individual points are flagged in
a status column instead of aborting the sweep. CSV output is deterministic
byte for byte: UTF-8, header row, newline endings, floats at 9 significant
digits.

The figure recipes regenerate the data behind the standard plots of the
linear-weight, log-cost family (d_A = 3, beta = 1, prior at 0 unless a
recipe says otherwise). Axis ranges and the swept variable were fixed by
what each plot shows rather than by any stated grid, so every recipe
carries its reconstruction in its description.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np

from .equilibrium import classify_equilibrium
from .errors import GameModelError, InvalidParameterError
from .functions import FunctionPair, make_linear_log_pair
from .game import GameConfig
from .outcomes import compare_outcomes

SWEEPABLE_PARAMETERS = ("d_A", "d_B", "beta", "manual_cost")

SWEEP_COLUMNS = (
    "alpha_A_star",
    "alpha_B_star",
    "kind",
    "theta_T_star",
    "theta_T_baseline",
    "e_T_star",
    "e_T_baseline",
    "delta_e_A",
    "delta_e_B",
    "L_T_star",
    "L_T_baseline",
    "status",
)

REGION_COLUMNS = ("d_A", "d_B", "kind")

_MAX_REGION_CELLS = 4_000_000


@dataclass(frozen=True)
class SweepSpec:
    """One swept parameter over an inclusive linspace."""

    parameter: str
    start: float
    stop: float
    points: int = 401

    def __post_init__(self) -> None:
        if self.parameter not in SWEEPABLE_PARAMETERS:
            raise InvalidParameterError(
                f"unknown sweep parameter {self.parameter!r}; "
                f"expected one of {', '.join(SWEEPABLE_PARAMETERS)}"
            )
        for name in ("start", "stop"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not np.isfinite(value):
                raise InvalidParameterError(f"{name} must be finite, got {value!r}")
        if not self.start < self.stop:
            raise InvalidParameterError("start must be less than stop")
        if not isinstance(self.points, int) or not 2 <= self.points <= 1_000_000:
            raise InvalidParameterError(
                f"points must be an int in [2, 1000000], got {self.points!r}"
            )

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.points)


def apply_sweep_value(
    config: GameConfig, parameter: str, value: float
) -> GameConfig:
    """Config with one knob replaced; diversities move theta, not the prior."""
    import dataclasses

    value = float(value)
    if parameter == "d_A":
        return dataclasses.replace(config, theta_A=config.mu_G + value)
    if parameter == "d_B":
        return dataclasses.replace(config, theta_B=config.mu_G + value)
    if parameter == "manual_cost":
        return dataclasses.replace(config, manual_cost=value)
    if parameter == "beta":
        if config.functions.family != "linear-log":
            raise InvalidParameterError(
                "beta sweeps need the linear-log function family, "
                f"got {config.functions.family!r}"
            )
        return dataclasses.replace(config, functions=make_linear_log_pair(value))
    raise InvalidParameterError(f"unknown sweep parameter {parameter!r}")


def run_sweep(config: GameConfig, spec: SweepSpec) -> list[dict[str, object]]:
    """Solve each sweep point; rows that fail carry the error in status."""
    rows: list[dict[str, object]] = []
    for value in spec.values():
        row: dict[str, object] = {spec.parameter: float(value)}
        try:
            point = apply_sweep_value(config, spec.parameter, value)
            report = compare_outcomes(point)
        except GameModelError as exc:
            for column in SWEEP_COLUMNS[:-1]:
                row[column] = ""
            row["status"] = f"failed:{type(exc).__name__}"
        else:
            row["alpha_A_star"] = report.equilibrium.profile.alpha_A
            row["alpha_B_star"] = report.equilibrium.profile.alpha_B
            row["kind"] = report.equilibrium.kind
            row["theta_T_star"] = report.theta_T_star
            row["theta_T_baseline"] = report.theta_T_baseline
            row["e_T_star"] = report.e_T_star
            row["e_T_baseline"] = report.e_T_baseline
            row["delta_e_A"] = report.delta_e_A
            row["delta_e_B"] = report.delta_e_B
            row["L_T_star"] = report.L_T_star
            row["L_T_baseline"] = report.L_T_baseline
            row["status"] = "ok"
        rows.append(row)
    return rows


def sweep_fieldnames(spec: SweepSpec) -> tuple[str, ...]:
    return (spec.parameter,) + SWEEP_COLUMNS


def region_rows(
    lo: float = -5.0,
    hi: float = 5.0,
    points: int = 101,
    mu_G: float = 0.0,
    functions: Optional[FunctionPair] = None,
) -> list[dict[str, object]]:
    """Equilibrium kind over a square diversity grid, by classification only.

    No profile is ever solved here, so the map doubles as an input to
    solver-independent checks (member exchange must swap OPR-A and OPR-B).
    """
    if not lo < hi:
        raise InvalidParameterError("lo must be less than hi")
    if not isinstance(points, int) or points < 2:
        raise InvalidParameterError(f"points must be an int >= 2, got {points!r}")
    if points * points > _MAX_REGION_CELLS:
        raise InvalidParameterError(
            f"{points}x{points} exceeds the {_MAX_REGION_CELLS} cell limit"
        )
    pair = functions if functions is not None else make_linear_log_pair(1.0)
    axis = np.linspace(lo, hi, points)
    rows: list[dict[str, object]] = []
    for d_a in axis:
        for d_b in axis:
            config = GameConfig(
                theta_A=mu_G + float(d_a),
                theta_B=mu_G + float(d_b),
                mu_G=mu_G,
                functions=pair,
            )
            kind = classify_equilibrium(config).kind
            rows.append({"d_A": float(d_a), "d_B": float(d_b), "kind": kind})
    return rows


def format_cell(value: object) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool) or value is None:
        raise InvalidParameterError(f"cannot format {value!r} as a CSV cell")
    return format(float(value), ".9g")


def write_csv(
    path: Path, fieldnames: Sequence[str], rows: Sequence[dict[str, object]]
) -> None:
    """Deterministic CSV: UTF-8, header, newline rows, floats at .9g."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([format_cell(row[name]) for name in fieldnames])


# -- figure recipes ---------------------------------------------------------

_D_RANGE = (-5.0, 5.0)
_HEAT_COLUMNS = ("d_A", "d_B", "decision_gap", "kind", "status")


def _base_config(beta: float = 1.0, manual_cost: float = 0.0) -> GameConfig:
    return GameConfig(
        theta_A=3.0,
        theta_B=0.0,
        mu_G=0.0,
        functions=make_linear_log_pair(beta),
        manual_cost=manual_cost,
    )


def _d_b_sweep(points: int) -> SweepSpec:
    return SweepSpec("d_B", _D_RANGE[0], _D_RANGE[1], points)


def _sweep_to_file(
    out_dir: Path,
    filename: str,
    config: GameConfig,
    points: int,
) -> tuple[Path, SweepSpec, list[dict[str, object]]]:
    spec = _d_b_sweep(points)
    rows = run_sweep(config, spec)
    path = out_dir / filename
    write_csv(path, sweep_fieldnames(spec), rows)
    return path, spec, rows


def _line_plot(
    path: Path,
    rows: Sequence[dict[str, object]],
    x: str,
    series: Sequence[str],
    ylabel: str,
) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ok = [row for row in rows if row["status"] == "ok"]
    xs = [row[x] for row in ok]
    for name in series:
        ax.plot(xs, [row[name] for row in ok], label=name)
    ax.set_xlabel(x)
    ax.set_ylabel(ylabel)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
    return path


def build_fig3(out_dir: Path, points: int = 401, plot: bool = False) -> list[Path]:
    path, _, rows = _sweep_to_file(out_dir, "fig3.csv", _base_config(), points)
    written = [path]
    if plot:
        written.append(
            _line_plot(
                out_dir / "fig3.svg",
                rows,
                "d_B",
                ("alpha_A_star", "alpha_B_star"),
                "equilibrium revelation",
            )
        )
    return written


def build_fig4(out_dir: Path, points: int = 101, plot: bool = False) -> list[Path]:
    if not isinstance(points, int) or points < 2:
        raise InvalidParameterError(f"points must be an int >= 2, got {points!r}")
    if points * points > _MAX_REGION_CELLS:
        raise InvalidParameterError(
            f"{points}x{points} exceeds the {_MAX_REGION_CELLS} cell limit"
        )
    axis = np.linspace(_D_RANGE[0], _D_RANGE[1], points)
    pair = make_linear_log_pair(1.0)
    rows: list[dict[str, object]] = []
    for d_a in axis:
        for d_b in axis:
            row: dict[str, object] = {"d_A": float(d_a), "d_B": float(d_b)}
            config = GameConfig(
                theta_A=float(d_a), theta_B=float(d_b), mu_G=0.0, functions=pair
            )
            try:
                report = compare_outcomes(config)
            except GameModelError as exc:
                row["decision_gap"] = ""
                row["kind"] = ""
                row["status"] = f"failed:{type(exc).__name__}"
            else:
                row["decision_gap"] = report.decision_gap
                row["kind"] = report.equilibrium.kind
                row["status"] = "ok"
            rows.append(row)
    path = out_dir / "fig4.csv"
    write_csv(path, _HEAT_COLUMNS, rows)
    written = [path]
    if plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        grid = np.full((points, points), np.nan)
        for i in range(points):
            for j in range(points):
                row = rows[i * points + j]
                if row["status"] == "ok":
                    grid[j, i] = float(row["decision_gap"])  # type: ignore[arg-type]
        fig, ax = plt.subplots(figsize=(5.5, 4.5))
        image = ax.imshow(
            grid,
            origin="lower",
            extent=(*_D_RANGE, *_D_RANGE),
            aspect="auto",
        )
        fig.colorbar(image, ax=ax, label="decision gap")
        ax.set_xlabel("d_A")
        ax.set_ylabel("d_B")
        fig.tight_layout()
        svg = out_dir / "fig4.svg"
        fig.savefig(svg, format="svg")
        plt.close(fig)
        written.append(svg)
    return written


def build_fig5(out_dir: Path, points: int = 401, plot: bool = False) -> list[Path]:
    written = []
    for d_a, tag in ((3.0, "3"), (-0.5, "-0.5")):
        config = GameConfig(
            theta_A=d_a, theta_B=0.0, mu_G=0.0, functions=make_linear_log_pair(1.0)
        )
        path, _, rows = _sweep_to_file(out_dir, f"fig5_dA_{tag}.csv", config, points)
        written.append(path)
        if plot:
            written.append(
                _line_plot(
                    out_dir / f"fig5_dA_{tag}.svg",
                    rows,
                    "d_B",
                    ("e_T_star", "e_T_baseline"),
                    "team preference loss",
                )
            )
    return written


def build_fig6(out_dir: Path, points: int = 401, plot: bool = False) -> list[Path]:
    path, _, rows = _sweep_to_file(out_dir, "fig6.csv", _base_config(), points)
    written = [path]
    if plot:
        written.append(
            _line_plot(
                out_dir / "fig6.svg",
                rows,
                "d_B",
                ("delta_e_A", "delta_e_B"),
                "preference loss vs baseline",
            )
        )
    return written


def build_fig7(out_dir: Path, points: int = 401, plot: bool = False) -> list[Path]:
    written = []
    for cost, tag in ((0.5, "0.5"), (2.0, "2")):
        config = _base_config(manual_cost=cost)
        path, _, rows = _sweep_to_file(out_dir, f"fig7_C_{tag}.csv", config, points)
        written.append(path)
        if plot:
            written.append(
                _line_plot(
                    out_dir / f"fig7_C_{tag}.svg",
                    rows,
                    "d_B",
                    ("L_T_star", "L_T_baseline"),
                    "team loss",
                )
            )
    return written


def build_fig8(out_dir: Path, points: int = 401, plot: bool = False) -> list[Path]:
    written = []
    for beta, tag in ((0.5, "0.5"), (1.0, "1"), (2.0, "2")):
        config = _base_config(beta=beta, manual_cost=2.0)
        path, _, rows = _sweep_to_file(
            out_dir, f"fig8_beta_{tag}.csv", config, points
        )
        written.append(path)
        if plot:
            written.append(
                _line_plot(
                    out_dir / f"fig8_beta_{tag}.svg",
                    rows,
                    "d_B",
                    ("L_T_star", "L_T_baseline"),
                    "team loss",
                )
            )
    return written


@dataclass(frozen=True)
class FigureRecipe:
    name: str
    description: str
    build: Callable[..., list[Path]]
    default_points: int


FIGURES: dict[str, FigureRecipe] = {
    recipe.name: recipe
    for recipe in (
        FigureRecipe(
            "fig3",
            "Equilibrium revelation levels vs d_B in [-5, 5] at d_A = 3, "
            "beta = 1, prior 0. Columns alpha_A_star and alpha_B_star trace "
            "both members through the NR / OPR / BPR transitions.",
            build_fig3,
            401,
        ),
        FigureRecipe(
            "fig4",
            "Decision gap |theta_T* - theta_T_baseline| over the diversity "
            "square (d_A, d_B) in [-5, 5]^2 at beta = 1; points counts grid "
            "nodes per axis. Includes the equilibrium kind per cell.",
            build_fig4,
            101,
        ),
        FigureRecipe(
            "fig5",
            "Team preference loss e_T* against the baseline e_T_baseline vs "
            "d_B, once at d_A = 3 and once at d_A = -0.5; the second pass "
            "shows the exact-equality point where opposite diversities "
            "cancel (d_B = 0.5, both silent).",
            build_fig5,
            401,
        ),
        FigureRecipe(
            "fig6",
            "Per-member preference loss changes delta_e_A and delta_e_B vs "
            "d_B at d_A = 3, exposing the bands where one member does "
            "better than under the manual baseline even though the team "
            "never does.",
            build_fig6,
            401,
        ),
        FigureRecipe(
            "fig7",
            "Total team loss L_T* vs the baseline L_T_baseline along d_B at "
            "d_A = 3, for manual costs C = 0.5 and C = 2; delegation wins "
            "where the curve dips under the baseline.",
            build_fig7,
            401,
        ),
        FigureRecipe(
            "fig8",
            "Total team loss L_T* along d_B at d_A = 3, C = 2, for "
            "revelation cost scales beta in {0.5, 1, 2}, plus the shared "
            "baseline; cheaper revelation widens the region where "
            "delegation beats the manual process.",
            build_fig8,
            401,
        ),
    )
}


def build_figure(
    name: str, out_dir: Path, points: Optional[int] = None, plot: bool = False
) -> list[Path]:
    if name not in FIGURES:
        raise InvalidParameterError(
            f"unknown figure {name!r}; expected one of {', '.join(sorted(FIGURES))}"
        )
    recipe = FIGURES[name]
    count = recipe.default_points if points is None else points
    out_dir.mkdir(parents=True, exist_ok=True)
    return recipe.build(out_dir, points=count, plot=plot)
