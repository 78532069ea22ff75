"""Command-line front end.

Four subcommands: ``measure`` (one parameter point), ``sweep`` (grid
over one parameter, CSV or JSON), ``figure`` (canned temperature-sweep
tables of one measure family), ``limits`` (both temperature extremes).

Exit codes: 0 success, 2 bad usage or invalid parameters, 3 closed-form
vs spectral verification failure, 4 output write failure.
"""

from __future__ import annotations

import argparse
import math
import sys

from .model import asymptotic_limits, hawking_temperature
from .sweep import (
    CSV_COLUMNS,
    RunConfig,
    SweepSpec,
    VerificationError,
    emit_csv,
    emit_json,
    evaluate_point,
    format_number,
    run_sweep,
)

__all__ = ["build_parser", "parse_args", "figure_command", "limits_command", "main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_WRITE = 4

_DEFAULT_FIGURE_ALPHA = 1.0 / math.sqrt(2.0)

_FIGURE_COLUMNS = {
    1: ("C_A_I", "C_A_II", "C_I_II"),
    2: ("EoF_A_I", "EoF_A_II", "EoF_I_II"),
    3: ("MI_A_I", "MI_A_II", "MI_I_II"),
}


def _alpha_value(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(value) and 0.0 < value < 1.0):
        raise argparse.ArgumentTypeError(f"alpha must lie strictly in (0, 1), got {text}")
    return value


def _positive_value(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(value) and value > 0.0):
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _non_negative_value(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(value) and value >= 0.0):
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return value


def _finite_value(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite, got {text}")
    return value


def _steps_value(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 2:
        raise argparse.ArgumentTypeError(f"steps must be >= 2, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hawkent",
        description="Pairwise entanglement and mutual information of three "
        "Dirac modes straddling a Schwarzschild horizon.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    measure = sub.add_parser("measure", help="all twelve measures at one parameter point")
    measure.add_argument("--alpha", type=_alpha_value, required=True)
    measure.add_argument("--omega", type=_positive_value, required=True)
    measure.add_argument("--temperature", type=_non_negative_value)
    measure.add_argument("--mass", type=_positive_value, help="black-hole mass; sets T = 1/(8 pi M)")
    measure.add_argument("--verify", choices=("on", "off"), default="on",
                         help="cross-check closed forms against the spectral route")
    measure.set_defaults(handler=_cmd_measure)

    swp = sub.add_parser("sweep", help="vary one parameter over a grid")
    swp.add_argument("--vary", choices=("alpha", "omega", "temperature"), required=True)
    swp.add_argument("--min", type=_finite_value, required=True)
    swp.add_argument("--max", type=_finite_value, required=True)
    swp.add_argument("--steps", type=_steps_value, required=True)
    swp.add_argument("--scale", choices=("linear", "log"), default="linear")
    swp.add_argument("--alpha", type=_alpha_value)
    swp.add_argument("--omega", type=_positive_value)
    swp.add_argument("--temperature", type=_non_negative_value)
    swp.add_argument("--mass", type=_positive_value, help="black-hole mass; sets T = 1/(8 pi M)")
    swp.add_argument("--format", choices=("csv", "json"), default="csv")
    swp.add_argument("--out", help="output path (default: stdout)")
    swp.add_argument("--verify", choices=("on", "off"), default="on",
                     help="cross-check closed forms against the spectral route")
    swp.set_defaults(handler=_cmd_sweep)

    fig = sub.add_parser(
        "figure",
        help="temperature-sweep table of one measure family "
        "(1: concurrence, 2: EoF, 3: mutual information)",
    )
    fig.add_argument("which", type=int, choices=(1, 2, 3))
    fig.add_argument("--alpha", type=_alpha_value, default=_DEFAULT_FIGURE_ALPHA,
                     help="superposition weight (default: 1/sqrt(2))")
    fig.add_argument("--omega", type=_positive_value, default=1.0)
    fig.add_argument("--max", type=_positive_value, default=10.0, dest="t_max",
                     help="top of the temperature grid (default: 10)")
    fig.add_argument("--steps", type=_steps_value, default=200)
    fig.add_argument("--out", help="output path (default: stdout)")
    fig.set_defaults(handler=_cmd_figure)

    lim = sub.add_parser("limits", help="closed-form values at T = 0 and T -> infinity")
    lim.add_argument("--alpha", type=_alpha_value, required=True)
    lim.set_defaults(handler=_cmd_limits)

    return parser


def _fixed_temperature(parser, temperature, mass, required: bool):
    if temperature is not None and mass is not None:
        parser.error("give either --temperature or --mass, not both")
    if mass is not None:
        return hawking_temperature(mass)
    if temperature is None and required:
        parser.error("one of --temperature or --mass is required")
    return temperature


def _write_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_measure(args, parser) -> int:
    temperature = _fixed_temperature(parser, args.temperature, args.mass, required=True)
    row = evaluate_point(args.alpha, args.omega, temperature, verify=args.verify == "on")
    lines = [
        f"{name} = {format_number(value)}"
        for name, value in zip(CSV_COLUMNS, row.as_tuple())
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _sweep_config(args, parser) -> RunConfig:
    fixed = {"alpha": args.alpha, "omega": args.omega, "temperature": None}
    mass = None
    if args.vary == "temperature":
        if args.temperature is not None or args.mass is not None:
            parser.error("--temperature/--mass conflict with --vary temperature")
    else:
        fixed["temperature"] = _fixed_temperature(parser, args.temperature, args.mass, required=True)
        mass = args.mass
    if fixed[args.vary] is not None:
        parser.error(f"--{args.vary} conflicts with --vary {args.vary}")
    for name in ("alpha", "omega"):
        if name != args.vary and fixed[name] is None:
            parser.error(f"--{name} is required when it is held fixed")
    try:
        spec = SweepSpec(
            vary=args.vary,
            min=args.min,
            max=args.max,
            steps=args.steps,
            scale=args.scale,
            **fixed,
        )
    except ValueError as exc:
        parser.error(str(exc))
    return RunConfig(
        sweep=spec,
        output_format=args.format,
        out=args.out,
        verify=args.verify == "on",
        mass=mass,
    )


def parse_args(argv) -> RunConfig:
    """Parse a ``sweep`` invocation into a validated RunConfig.

    Any invalid flag or value exits with code 2 and usage text, as on
    the command line.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "sweep":
        parser.error(f"expected a sweep invocation, got {args.command!r}")
    return _sweep_config(args, parser)


def _cmd_sweep(args, parser) -> int:
    config = _sweep_config(args, parser)
    rows = run_sweep(config)
    if args.out is None:
        _emit(rows, sys.stdout, config)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            _emit(rows, fh, config)
    return EXIT_OK


def _emit(rows, stream, config: RunConfig) -> None:
    if config.output_format == "json":
        emit_json(rows, stream, config)
    else:
        emit_csv(rows, stream)


def figure_command(
    which: int,
    alpha: float = _DEFAULT_FIGURE_ALPHA,
    omega: float = 1.0,
    t_max: float = 10.0,
    steps: int = 200,
) -> str:
    """CSV table of one measure family over T in [0.01, t_max], log grid."""
    if which not in _FIGURE_COLUMNS:
        raise ValueError(f"figure number must be 1, 2 or 3, got {which!r}")
    if t_max <= 0.01:
        raise ValueError(f"figure needs max > 0.01, got {t_max!r}")
    spec = SweepSpec(
        vary="temperature",
        min=0.01,
        max=t_max,
        steps=steps,
        scale="log",
        alpha=alpha,
        omega=omega,
    )
    rows = run_sweep(RunConfig(sweep=spec))
    names = _FIGURE_COLUMNS[which]
    indices = [CSV_COLUMNS.index(name) for name in names]
    lines = ["temperature," + ",".join(names)]
    for row in rows:
        values = row.as_tuple()
        lines.append(",".join(format_number(values[k]) for k in (2, *indices)))
    return "\n".join(lines) + "\n"


def _cmd_figure(args, parser) -> int:
    text = figure_command(args.which, args.alpha, args.omega, args.t_max, args.steps)
    _write_text(text, args.out)
    return EXIT_OK


def limits_command(alpha: float) -> str:
    """Two-column report of the T = 0 and T -> infinity values."""
    report = asymptotic_limits(alpha)
    names = ("C_A_I", "C_A_II", "C_I_II", "MI_A_I", "MI_A_II", "MI_I_II")
    zero = report.zero_temperature
    hot = report.infinite_temperature
    pairs = zip(
        (zero.c_a_i, zero.c_a_ii, zero.c_i_ii, zero.mi_a_i, zero.mi_a_ii, zero.mi_i_ii),
        (hot.c_a_i, hot.c_a_ii, hot.c_i_ii, hot.mi_a_i, hot.mi_a_ii, hot.mi_i_ii),
    )
    lines = [
        f"alpha = {format_number(report.alpha)}",
        f"{'measure':<10}{'T = 0':<18}T -> infinity",
    ]
    for name, (cold, warm) in zip(names, pairs):
        lines.append(f"{name:<10}{format_number(cold):<18}{format_number(warm)}")
    lines.append(
        "accessible MI ratio: MI_A_I(T->inf) / MI_A_I(T=0) = "
        + format_number(report.accessible_mi_ratio)
    )
    return "\n".join(lines) + "\n"


def _cmd_limits(args, parser) -> int:
    sys.stdout.write(limits_command(args.alpha))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except OSError as exc:
        print(f"write failed: {exc}", file=sys.stderr)
        return EXIT_WRITE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
