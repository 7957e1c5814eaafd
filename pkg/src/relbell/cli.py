"""Command-line front end: single-point evaluation, sweeps, verification.

Subcommands: wigner | boost-bell | correlate | chsh | sweep | maximize |
verify.  Results go to stdout as CSV (default, one header row) or JSON;
diagnostics go to stderr.  Exit status 0 on success, 1 on verification
failure, 2 on usage or domain errors.  All numeric output carries 12
significant digits and is byte-identical for identical flags and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import chsh as chsh_mod
from . import kinematics as kin
from . import oracle as oracle_mod
from .observables import (ClosedFormUnavailable, MeasurementDirection,
                          expectation_closed_form, joint_expectation,
                          spin_observable)
from .spin_states import (bell_decompose, bell_state, boost_bell_closed_form,
                          boost_two_particle)

EXIT_OK = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE = 2


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _json_ready(value):
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, dict):
        return {k: _json_ready(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_ready(v) for v in value]
    return value


def emit_rows(header: list[str], rows: list[list], fmt: str) -> None:
    if fmt == "json":
        records = [dict(zip(header, row)) for row in rows]
        print(json.dumps(_json_ready(records), indent=2))
    else:
        print(",".join(header))
        for row in rows:
            print(",".join(_fmt(v) for v in row))


def add_boost_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--beta", type=float, help="observer speed ratio in [0, 1)")
    group.add_argument("--cosh-alpha", type=float, help="cosh of the observer rapidity")


def add_momentum_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--delta", type=float, help="momentum rapidity (>= 0)")
    group.add_argument("--cosh-delta", type=float, help="cosh of the momentum rapidity")
    parser.add_argument("--theta", type=float, default=0.0, help="polar angle [0, pi]")
    parser.add_argument("--phi", type=float, default=0.0, help="azimuth [0, 2*pi)")
    parser.add_argument("--mass", type=float, default=1.0, help="particle mass (> 0)")


def resolve_boost(args) -> kin.BoostParameters:
    if args.cosh_alpha is not None:
        return kin.BoostParameters.from_cosh_alpha(args.cosh_alpha)
    return kin.BoostParameters.from_beta(args.beta if args.beta is not None else 0.0)


def resolve_momentum(args) -> kin.MomentumState:
    if args.cosh_delta is not None:
        return kin.MomentumState.from_cosh_delta(args.mass, args.cosh_delta,
                                                 args.theta, args.phi)
    delta = args.delta if args.delta is not None else 0.0
    return kin.MomentumState(args.mass, delta, args.theta, args.phi)


def parse_direction(text: str) -> MeasurementDirection:
    parts = [float(p) for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated components, got {text!r}")
    return MeasurementDirection.from_vector(np.array(parts))


def cmd_wigner(args) -> int:
    boost = resolve_boost(args)
    momentum = resolve_momentum(args)
    rot = kin.wigner_rotation(boost, momentum, +1 if args.sign == "+" else -1)
    emit_rows(
        ["omega", "cos_half", "sin_half", "axis_x", "axis_y", "axis_z"],
        [[rot.omega, rot.cos_half, rot.sin_half, *map(float, rot.axis_n)]],
        args.format)
    return EXIT_OK


def cmd_boost_bell(args) -> int:
    boost = resolve_boost(args)
    momentum = resolve_momentum(args)
    header = ["path"]
    for name in ("c00", "c01", "c10", "c11"):
        header += [f"{name}_re", f"{name}_im"]
    rows = []
    closed = matrix = None
    if args.path in ("closed", "both"):
        closed = boost_bell_closed_form(args.state,
                                        kin.angle_decomposition(boost, momentum))
        rows.append(["closed"] + _complex_cells(closed.as_array()))
    if args.path in ("matrix", "both"):
        matrix = bell_decompose(boost_two_particle(bell_state(args.state),
                                                   boost, momentum))
        rows.append(["matrix"] + _complex_cells(matrix.as_array()))
    if args.path == "both":
        deviation = float(np.abs(closed.as_array() - matrix.as_array()).max())
        print(f"max deviation between paths: {deviation:.3e}", file=sys.stderr)
        header.append("max_deviation")
        for row in rows:
            row.append(deviation)
    emit_rows(header, rows, args.format)
    return EXIT_OK


def _complex_cells(values: np.ndarray) -> list[float]:
    cells: list[float] = []
    for v in values:
        cells += [float(v.real), float(v.imag)]
    return cells


def cmd_correlate(args) -> int:
    boost = resolve_boost(args)
    momentum = resolve_momentum(args)
    a = parse_direction(args.a)
    b = parse_direction(args.b)
    rows = []
    closed = matrix = None
    if args.path in ("closed", "both"):
        angles = kin.angle_decomposition(boost, momentum)
        closed = expectation_closed_form(args.state, angles, a, b,
                                         boost.beta, case=args.case)
        rows.append(["closed", closed])
    if args.path in ("matrix", "both"):
        state = boost_two_particle(bell_state(args.state), boost, momentum)
        matrix = joint_expectation(state, a, b, boost)
        rows.append(["matrix", matrix])
    header = ["path", "expectation"]
    if args.path == "both":
        header.append("deviation")
        for row in rows:
            row.append(abs(closed - matrix))
    emit_rows(header, rows, args.format)
    return EXIT_OK


def cmd_chsh(args) -> int:
    boost = resolve_boost(args)
    momentum = resolve_momentum(args)
    if args.canonical:
        settings = chsh_mod.canonical_settings(args.state)
    else:
        required = (args.a, args.a_prime, args.b, args.b_prime)
        if any(v is None for v in required):
            raise ValueError("provide --canonical or all of --a --a-prime --b --b-prime")
        settings = chsh_mod.ChshSettings(*(parse_direction(v) for v in required))
    value = chsh_mod.chsh_value(args.state, settings, boost, momentum)
    emit_rows(["label", "beta", "chsh"], [[args.state, boost.beta, value]], args.format)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.steps < 2:
        raise ValueError("steps must be at least 2")
    if args.start > args.stop:
        raise ValueError("--from must not exceed --to")
    if args.param == "beta" and not (0.0 <= args.start and args.stop <= 0.999):
        raise ValueError("swept beta range must lie within [0, 0.999]")
    fixed_boost = resolve_boost(args)
    fixed_momentum = resolve_momentum(args)
    rows = []
    for value in np.linspace(args.start, args.stop, args.steps):
        value = float(value)
        boost = (kin.BoostParameters.from_beta(value)
                 if args.param == "beta" else fixed_boost)
        if args.param == "beta":
            momentum = fixed_momentum
        else:
            fields = {"delta": fixed_momentum.rapidity_delta,
                      "theta": fixed_momentum.theta, "phi": fixed_momentum.phi,
                      args.param: value}
            momentum = kin.MomentumState(fixed_momentum.mass_m, fields["delta"],
                                         fields["theta"], fields["phi"])
        angles = kin.angle_decomposition(boost, momentum)
        closed = chsh_mod.chsh_closed_form(args.state, boost.beta, angles,
                                           case=args.case)
        matrix = chsh_mod.chsh_value(args.state,
                                     chsh_mod.canonical_settings(args.state),
                                     boost, momentum)
        q_minus, q_plus, _, _ = kin.appendix_quantities(angles.t, momentum.theta,
                                                        momentum.phi)
        rows.append([value, closed, matrix,
                     chsh_mod.universal_curve(boost.beta), q_minus, q_plus])
    emit_rows([args.param, "chsh_closed", "chsh_matrix", "universal_curve",
               "q_minus", "q_plus"], rows, args.format)
    return EXIT_OK


def cmd_maximize(args) -> int:
    boost = resolve_boost(args)
    momentum = resolve_momentum(args)
    result = chsh_mod.maximize_chsh(args.state, boost, momentum,
                                    method=args.method, seed=args.seed)
    if not result.converged:
        print("warning: optimizer hit the iteration cap; reporting best-so-far",
              file=sys.stderr)
    header = ["label", "method", "chsh_max", "converged"]
    row: list = [args.state, args.method, result.value, int(result.converged)]
    for name, direction in zip(("a", "a_prime", "b", "b_prime"),
                               result.settings.directions()):
        for axis, comp in zip("xyz", direction.vec_a):
            header.append(f"{name}_{axis}")
            row.append(float(comp))
    emit_rows(header, [row], args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = []
    if args.suite in ("oracle", "all"):
        reports.append(("oracle", oracle_mod.crosscheck_suite(args.seed, args.samples)))
    if args.suite in ("bounds", "all"):
        reports.append(("bounds", oracle_mod.bounds_suite()))
    header = ["suite", "comparison", "max_deviation", "tolerance", "status"]
    rows = []
    all_passed = True
    for suite_name, report in reports:
        for name, deviation in report.deviations.items():
            tolerance = report.tolerances[name]
            ok = deviation <= tolerance
            rows.append([suite_name, name, deviation, tolerance,
                         "pass" if ok else "FAIL"])
        if not report.passed:
            all_passed = False
            for failure in report.failures:
                print(f"verification failure: {failure}", file=sys.stderr)
    emit_rows(header, rows, args.format)
    return EXIT_OK if all_passed else EXIT_VERIFICATION_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relbell",
        description="Boosted Bell states, relativistic spin observables and CHSH curves")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, momentum=True):
        add_boost_flags(p)
        if momentum:
            add_momentum_flags(p)
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("wigner", help="little-group rotation of one particle")
    common(p)
    p.add_argument("--sign", choices=("+", "-"), default="+",
                   help="which pair member: + carries +p, - carries -p")
    p.set_defaults(func=cmd_wigner)

    p = sub.add_parser("boost-bell", help="Bell coefficients of a boosted Bell state")
    common(p)
    p.add_argument("--state", choices=("00", "01", "10", "11"), required=True)
    p.add_argument("--path", choices=("closed", "matrix", "both"), default="both")
    p.set_defaults(func=cmd_boost_bell)

    p = sub.add_parser("correlate", help="joint expectation of two spin measurements")
    common(p)
    p.add_argument("--state", choices=("00", "01", "10", "11"), required=True)
    p.add_argument("--a", required=True, help="first direction as x,y,z")
    p.add_argument("--b", required=True, help="second direction as x,y,z")
    p.add_argument("--path", choices=("closed", "matrix", "both"), default="matrix")
    p.add_argument("--case", choices=("A", "B"), default="B")
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("chsh", help="CHSH combination on the boosted state")
    common(p)
    p.add_argument("--state", choices=("00", "01", "10", "11"), required=True)
    p.add_argument("--canonical", action="store_true",
                   help="use the canonical settings for the label")
    p.add_argument("--a")
    p.add_argument("--a-prime")
    p.add_argument("--b")
    p.add_argument("--b-prime")
    p.set_defaults(func=cmd_chsh)

    p = sub.add_parser("sweep", help="CSV sweep over one kinematic parameter")
    common(p)
    p.add_argument("--param", choices=("beta", "delta", "theta", "phi"), required=True)
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--state", choices=("00", "01"), required=True)
    p.add_argument("--case", choices=("A", "B"), default="B")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("maximize", help="search settings maximizing the CHSH value")
    common(p)
    p.add_argument("--state", choices=("00", "01", "10", "11"), required=True)
    p.add_argument("--method", choices=("grid", "simplex"), default="simplex")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_maximize)

    p = sub.add_parser("verify", help="run the cross-check suites")
    p.add_argument("--suite", choices=("oracle", "bounds", "all"), default="all")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ClosedFormUnavailable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
