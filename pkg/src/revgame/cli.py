"""Command-line front end.

Five subcommands: ``solve`` prints the equilibrium and outcome comparison
for one config, ``sweep`` writes per-point CSV rows while one parameter
varies, ``regions`` maps equilibrium kinds over the diversity square,
``reproduce`` regenerates the bundled figure datasets, and ``verify``
cross-checks the closed-form solution against the grid-search oracle.

Exit codes: 0 success, 1 bad usage or unparseable config, 2 solver
failure, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .equilibrium import solve_equilibrium, verify_equilibrium
from .errors import ConfigError, GameModelError, InvalidParameterError
from .functions import make_linear_log_pair
from .game import GameConfig, load_config_file
from .oracle import GridSpec, brute_force_equilibrium
from .outcomes import compare_outcomes
from .sweeps import (
    FIGURES,
    REGION_COLUMNS,
    SweepSpec,
    build_figure,
    region_rows,
    run_sweep,
    sweep_fieldnames,
    write_csv,
)

USAGE_ERROR = 1
SOLVER_ERROR = 2
VERIFY_ERROR = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract here says 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _load_config(path: str) -> GameConfig:
    config, warnings = load_config_file(path)
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return config


def _default_base() -> GameConfig:
    """Base for sweeps run without a config: d_A = 3, beta = 1, prior 0."""
    return GameConfig(
        theta_A=3.0, theta_B=0.0, mu_G=0.0, functions=make_linear_log_pair(1.0)
    )


def _profile_pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"expected two comma-separated levels, got {text!r}"
        )
    try:
        values = tuple(float(part) for part in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return values  # type: ignore[return-value]


def cmd_solve(args: argparse.Namespace) -> int:
    config = _load_config(args.config)
    result = solve_equilibrium(config)
    report = compare_outcomes(config, result)
    print(f"kind: {result.kind}")
    print(f"alpha_A_star: {result.profile.alpha_A:.5f}")
    print(f"alpha_B_star: {result.profile.alpha_B:.5f}")
    print(f"residual: {result.residual:.3e}")
    print(f"theta_T_star: {report.theta_T_star:.9g}")
    print(f"theta_T_baseline: {report.theta_T_baseline:.9g}")
    print(f"decision_gap: {report.decision_gap:.9g}")
    print(f"e_T_star: {report.e_T_star:.9g}")
    print(f"e_T_baseline: {report.e_T_baseline:.9g}")
    print(f"L_T_star: {report.L_T_star:.9g}")
    print(f"L_T_baseline: {report.L_T_baseline:.9g}")
    print(f"break_even_C: {report.break_even_C:.9g}")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    config = _load_config(args.config) if args.config else _default_base()
    spec = SweepSpec(args.parameter, args.start, args.stop, args.points)
    rows = run_sweep(config, spec)
    out = Path(args.out)
    write_csv(out, sweep_fieldnames(spec), rows)
    written = [out]
    if args.plot:
        from .sweeps import _line_plot

        written.append(
            _line_plot(
                out.with_suffix(".svg"),
                rows,
                spec.parameter,
                ("alpha_A_star", "alpha_B_star"),
                "equilibrium revelation",
            )
        )
    failed = sum(1 for row in rows if row["status"] != "ok")
    for path in written:
        print(f"wrote {path}")
    if failed:
        print(f"{failed} of {len(rows)} points failed; see status column")
    return 0


def cmd_regions(args: argparse.Namespace) -> int:
    functions = None
    mu_g = 0.0
    if args.config:
        config = _load_config(args.config)
        functions = config.functions
        mu_g = config.mu_G
    rows = region_rows(
        lo=args.lo, hi=args.hi, points=args.points, mu_G=mu_g, functions=functions
    )
    out = Path(args.out)
    write_csv(out, REGION_COLUMNS, rows)
    print(f"wrote {out}")
    if args.plot:
        svg = _plot_regions(out.with_suffix(".svg"), rows, args.points)
        print(f"wrote {svg}")
    return 0


_KIND_ORDER = ("NR", "OPR-A", "OPR-B", "BPR-Conflicting", "BPR-Aligned")


def _plot_regions(path: Path, rows: list[dict[str, object]], points: int) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    index = {kind: i for i, kind in enumerate(_KIND_ORDER)}
    grid = np.zeros((points, points))
    for i in range(points):
        for j in range(points):
            grid[j, i] = index[str(rows[i * points + j]["kind"])]
    lo = float(rows[0]["d_A"])  # type: ignore[arg-type]
    hi = float(rows[-1]["d_A"])  # type: ignore[arg-type]
    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    image = ax.imshow(
        grid,
        origin="lower",
        extent=(lo, hi, lo, hi),
        aspect="auto",
        vmin=-0.5,
        vmax=len(_KIND_ORDER) - 0.5,
        cmap=plt.get_cmap("viridis", len(_KIND_ORDER)),
    )
    bar = fig.colorbar(image, ax=ax, ticks=range(len(_KIND_ORDER)))
    bar.ax.set_yticklabels(_KIND_ORDER)
    ax.set_xlabel("d_A")
    ax.set_ylabel("d_B")
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
    return path


def cmd_reproduce(args: argparse.Namespace) -> int:
    names = sorted(FIGURES) if args.figure == "all" else [args.figure]
    out_dir = Path(args.out)
    for name in names:
        for path in build_figure(name, out_dir, points=args.points, plot=args.plot):
            print(f"wrote {path}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    config = _load_config(args.config)
    if args.assert_profile is not None:
        from .game import RevelationProfile

        alpha_a, alpha_b = args.assert_profile
        profile = RevelationProfile(alpha_A=alpha_a, alpha_B=alpha_b)
        print(f"asserted profile: ({alpha_a:.5f}, {alpha_b:.5f})")
    else:
        result = solve_equilibrium(config)
        profile = result.profile
        print(f"kind: {result.kind}")
        print(
            f"solved profile: ({profile.alpha_A:.5f}, {profile.alpha_B:.5f})"
        )

    grid = GridSpec(step=args.step)
    oracle_profile, rounds = brute_force_equilibrium(config, grid)
    print(
        f"oracle profile: ({oracle_profile.alpha_A:.5f}, "
        f"{oracle_profile.alpha_B:.5f}) after {rounds} rounds"
    )
    deviation = max(
        abs(profile.alpha_A - oracle_profile.alpha_A),
        abs(profile.alpha_B - oracle_profile.alpha_B),
    )
    tolerance = 2.0 * args.step
    print(f"max deviation: {deviation:.3e} (tolerance {tolerance:.3e})")
    check = verify_equilibrium(config, profile, grid_step=args.step)
    print(
        f"best unilateral improvement: {check.max_improvement:.3e} "
        f"(tolerance {check.tolerance:.3e})"
    )
    if deviation > tolerance or not check.passed:
        print("verification FAILED")
        return VERIFY_ERROR
    print("verification passed")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(
        prog="revgame",
        description="Solve and explore the two-member revelation game.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    subparsers = parser.add_subparsers(
        dest="command", required=True, parser_class=_Parser
    )

    solve = subparsers.add_parser(
        "solve", help="solve one config and print the outcome comparison"
    )
    solve.add_argument("--config", required=True, help="key = value config file")
    solve.set_defaults(func=cmd_solve)

    sweep = subparsers.add_parser(
        "sweep", help="sweep one parameter and write per-point CSV rows"
    )
    sweep.add_argument(
        "parameter",
        choices=("d_A", "d_B", "beta", "manual_cost"),
        help="which knob to vary",
    )
    sweep.add_argument(
        "--config",
        help="base config file (default: d_A = 3, theta_B = 0, beta = 1)",
    )
    sweep.add_argument("--start", type=float, default=-5.0)
    sweep.add_argument("--stop", type=float, default=5.0)
    sweep.add_argument("--points", type=int, default=401)
    sweep.add_argument("--out", required=True, help="CSV output path")
    sweep.add_argument(
        "--plot", action="store_true", help="also write an SVG next to the CSV"
    )
    sweep.set_defaults(func=cmd_sweep)

    regions = subparsers.add_parser(
        "regions", help="classify equilibrium kind over the diversity square"
    )
    regions.add_argument("--config", help="config supplying functions and prior")
    regions.add_argument("--lo", type=float, default=-5.0)
    regions.add_argument("--hi", type=float, default=5.0)
    regions.add_argument("--points", type=int, default=101, help="nodes per axis")
    regions.add_argument("--out", required=True, help="CSV output path")
    regions.add_argument("--plot", action="store_true")
    regions.set_defaults(func=cmd_regions)

    figure_help = "\n".join(
        f"  {name}: {FIGURES[name].description}" for name in sorted(FIGURES)
    )
    reproduce = subparsers.add_parser(
        "reproduce",
        help="regenerate the bundled figure datasets",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"figures:\n{figure_help}",
    )
    reproduce.add_argument(
        "figure", choices=sorted(FIGURES) + ["all"], help="which dataset to build"
    )
    reproduce.add_argument("--out", default="figures", help="output directory")
    reproduce.add_argument(
        "--points", type=int, default=None, help="sweep points (or nodes per axis)"
    )
    reproduce.add_argument("--plot", action="store_true")
    reproduce.set_defaults(func=cmd_reproduce)

    verify = subparsers.add_parser(
        "verify", help="cross-check the solver against the grid-search oracle"
    )
    verify.add_argument("--config", required=True)
    verify.add_argument(
        "--step",
        type=float,
        default=1e-3,
        help="oracle grid step; agreement tolerance is twice this",
    )
    verify.add_argument(
        "--assert-profile",
        type=_profile_pair,
        default=None,
        metavar="A,B",
        help="check this profile instead of solving, e.g. 0.5,0.5",
    )
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except (ConfigError, InvalidParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except GameModelError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return SOLVER_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
