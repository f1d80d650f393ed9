"""Command-line front end: measure states, sweep families, emit figure data.

Subcommands: ``measure``, ``eigs``, ``sweep``, ``surface``, ``verify``.
Exit codes: 0 ok, 1 verification failure, 2 I/O or parse error, 3 invalid
state.  Identical invocations produce byte-identical output; CSV floats are
written with 17 significant digits so values round-trip exactly.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .families import FAMILY_ANGLES, FAMILY_TAGS, THREEQ, FamilySpec, family_state
from .metric import (
    DEFAULT_RANK_TOL,
    entanglement_measure,
    entanglement_metric,
    spectrum,
    w_vectors,
)
from .qstate import StateFileError, StateVector, read_state_file
from .verify import (
    DEFAULT_RESTARTS,
    DEFAULT_TOL,
    bloch_vector_oracle,
    invariance_check,
    minimize_trace_numeric,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_INVALID_STATE = 3

# verification thresholds enforced by the ``verify`` subcommand
INVARIANCE_TOL = 1e-9
OPTIMIZER_TOL = 1e-6
BLOCH_TOL = 1e-12

# figure abscissa per swept angle: x = angle / divisor
_ABSCISSA_DIVISOR = {
    "phi": 2.0 * np.pi,
    "theta": np.pi / 2.0,
    "phase": 2.0 * np.pi,
    "gamma": np.pi,
    "tau": np.pi,
}


@dataclass(frozen=True)
class SweepSpec:
    """One-parameter sweep of a family angle over a uniform grid."""

    family: FamilySpec
    parameter: str
    start: float
    stop: float
    points: int
    normalize: bool = False

    def __post_init__(self) -> None:
        if self.parameter not in FAMILY_ANGLES[self.family.tag]:
            raise ValueError(
                f"family {self.family.tag!r} has no sweep angle {self.parameter!r}"
            )
        if not self.start < self.stop:
            raise ValueError("sweep requires start < stop")
        if self.points < 2:
            raise ValueError("sweep requires at least 2 points")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def run_sweep(spec: SweepSpec) -> tuple[list[str], list[list[float]]]:
    """Compute sweep rows (x, E, E/M, eigenvalues descending)."""
    m = spec.family.m
    header = ["x", "E", "E_over_M"] + [f"eig_{i}" for i in range(1, m + 1)]
    divisor = _ABSCISSA_DIVISOR[spec.parameter]
    rows = []
    for value in np.linspace(spec.start, spec.stop, spec.points):
        fam = dataclasses.replace(spec.family, **{spec.parameter: float(value)})
        em = entanglement_metric(family_state(fam))
        eigs = spectrum(em).eigenvalues
        if spec.normalize:
            eigs = eigs / m
        rows.append([float(value) / divisor, em.measure, em.measure / m, *map(float, eigs)])
    return header, rows


def run_surface(
    gamma_range: tuple[float, float], tau_range: tuple[float, float], points: int
) -> tuple[list[str], list[list[float]]]:
    """Row-major (gamma outer, tau inner) grid of E/3 for the three-qubit family."""
    if points < 2:
        raise ValueError("surface requires at least 2 points per axis")
    if not (gamma_range[0] < gamma_range[1] and tau_range[0] < tau_range[1]):
        raise ValueError("surface ranges require start < stop")
    header = ["gamma", "tau", "E_over_3"]
    rows = []
    for gamma in np.linspace(*gamma_range, points):
        for tau in np.linspace(*tau_range, points):
            fam = FamilySpec(tag=THREEQ, m=3, gamma=float(gamma), tau=float(tau))
            e = entanglement_measure(family_state(fam))
            rows.append([float(gamma), float(tau), e / 3.0])
    return header, rows


def _csv_text(header: list[str], rows: list[list[float]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(x) for x in row) for row in rows)
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _add_family_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=FAMILY_TAGS, help="generate a family state")
    parser.add_argument("--m", type=int, help="number of qubits (brs/ghzl)")
    parser.add_argument("--phi", type=float, default=0.0, help="brs phase angle")
    parser.add_argument("--theta", type=float, default=0.0, help="ghzl mixing angle")
    parser.add_argument("--phase", type=float, default=0.0, help="ghzl relative phase")
    parser.add_argument("--gamma", type=float, default=0.0, help="threeq angle")
    parser.add_argument("--tau", type=float, default=0.0, help="threeq angle")


def _add_state_source(parser: argparse.ArgumentParser) -> None:
    _add_family_flags(parser)
    parser.add_argument("--family-json", help="family spec as a JSON object string")
    parser.add_argument("--state-file", help='JSON state file {"m", "re", "im"}')


def _add_common(parser: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    parser.add_argument("--seed", type=int, default=0, help="seed for any randomness")
    parser.add_argument("--out", help="output path (default: stdout)")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="JSON output")
    group.add_argument("--csv", action="store_true", help="CSV output")
    parser.set_defaults(_formats=formats)


def _resolve_format(args: argparse.Namespace, parser: argparse.ArgumentParser) -> str:
    requested = "json" if args.json else "csv" if args.csv else args._formats[0]
    if requested not in args._formats:
        parser.error(f"{args.command} supports only {'/'.join(args._formats)} output")
    return requested


def _state_from_args(args: argparse.Namespace, parser: argparse.ArgumentParser) -> StateVector:
    """Build the input state; argparse-level errors exit 2, bad norms raise."""
    if args.state_file is not None:
        return read_state_file(args.state_file)
    if args.family_json is not None:
        try:
            spec = FamilySpec.from_dict(json.loads(args.family_json))
        except (json.JSONDecodeError, ValueError) as exc:
            raise StateFileError(f"invalid --family-json: {exc}") from exc
        return family_state(spec)
    if args.family is None:
        parser.error("provide one of --family, --family-json or --state-file")
    try:
        spec = _family_from_flags(args, parser)
    except ValueError as exc:
        parser.error(str(exc))
    return family_state(spec)


def _family_from_flags(args: argparse.Namespace, parser: argparse.ArgumentParser) -> FamilySpec:
    if args.family == THREEQ:
        return FamilySpec(tag=THREEQ, m=3, gamma=args.gamma, tau=args.tau)
    if args.m is None:
        parser.error(f"--family {args.family} requires --m")
    if args.family == "brs":
        return FamilySpec(tag="brs", m=args.m, phi=args.phi)
    return FamilySpec(tag="ghzl", m=args.m, theta=args.theta, phase=args.phase)


def _cmd_measure(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _resolve_format(args, parser)
    state = _state_from_args(args, parser)
    em = entanglement_metric(state)
    record = em.to_dict()
    payload = {
        "m": record["m"],
        "measure": record["measure"],
        "measure_over_m": record["measure"] / record["m"],
        "directions": record["directions"],
        "matrix": record["matrix"],
        "eigenvalues": record["eigenvalues"],
    }
    _emit(json.dumps(payload) + "\n", args.out)
    return EXIT_OK


def _cmd_eigs(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    state = _state_from_args(args, parser)
    fmt = _resolve_format(args, parser)
    spec = spectrum(entanglement_metric(state), rank_tol=args.rank_tol)
    eigs = [float(x) for x in spec.eigenvalues]
    if fmt == "json":
        payload = {
            "m": state.num_qubits,
            "rank_tol": spec.rank_tol,
            "eigenvalues": eigs,
            "nonnull_count": spec.nonnull_count,
        }
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        header = [f"eig_{i}" for i in range(1, state.num_qubits + 1)]
        _emit(_csv_text(header, [eigs]), args.out)
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _resolve_format(args, parser)
    if args.family is None:
        parser.error("sweep requires --family")
    try:
        template = _family_from_flags(args, parser)
        spec = SweepSpec(
            family=template,
            parameter=args.parameter,
            start=args.start,
            stop=args.stop,
            points=args.points,
            normalize=args.normalize,
        )
    except ValueError as exc:
        parser.error(str(exc))
    header, rows = run_sweep(spec)
    _emit(_csv_text(header, rows), args.out)
    return EXIT_OK


def _cmd_surface(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _resolve_format(args, parser)
    header, rows = run_surface(
        (args.gamma_start, args.gamma_stop), (args.tau_start, args.tau_stop), args.points
    )
    _emit(_csv_text(header, rows), args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _resolve_format(args, parser)
    state = _state_from_args(args, parser)
    analytic = entanglement_measure(state)
    deviation = invariance_check(state, trials=args.trials, seed=args.seed)
    report = minimize_trace_numeric(
        state, restarts=args.restarts, tol=DEFAULT_TOL, seed=args.seed + 1
    )
    bloch_gap = 0.0
    for nu, w in enumerate(w_vectors(state)):
        gap = np.max(np.abs(w.bloch - bloch_vector_oracle(state, nu)))
        bloch_gap = max(bloch_gap, float(gap))
    passed = (
        deviation < INVARIANCE_TOL
        and abs(report.value - analytic) < OPTIMIZER_TOL
        and bloch_gap < BLOCH_TOL
    )
    payload = {
        "m": state.num_qubits,
        "analytic_measure": analytic,
        "invariance_max_deviation": deviation,
        "optimizer_value": report.value,
        "optimizer_gap": abs(report.value - analytic),
        "optimizer_converged": report.converged,
        "bloch_gap": bloch_gap,
        "passed": passed,
    }
    _emit(json.dumps(payload) + "\n", args.out)
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entdist",
        description="Entanglement distance, metric and spectrum for pure M-qubit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_measure = sub.add_parser("measure", help="E, directions, metric and eigenvalues")
    _add_state_source(p_measure)
    _add_common(p_measure, formats=("json",))
    p_measure.set_defaults(func=_cmd_measure)

    p_eigs = sub.add_parser("eigs", help="eigenvalue spectrum of the metric")
    _add_state_source(p_eigs)
    _add_common(p_eigs, formats=("json", "csv"))
    p_eigs.add_argument("--rank-tol", type=float, default=DEFAULT_RANK_TOL)
    p_eigs.set_defaults(func=_cmd_eigs)

    p_sweep = sub.add_parser("sweep", help="sweep a family angle, emit figure CSV")
    _add_state_source(p_sweep)
    _add_common(p_sweep, formats=("csv",))
    p_sweep.add_argument("--parameter", required=True, choices=sorted(_ABSCISSA_DIVISOR))
    p_sweep.add_argument("--start", type=float, required=True)
    p_sweep.add_argument("--stop", type=float, required=True)
    p_sweep.add_argument("--points", type=int, required=True)
    p_sweep.add_argument(
        "--normalize", action="store_true", help="divide eigenvalue columns by M"
    )
    p_sweep.set_defaults(func=_cmd_sweep)

    p_surface = sub.add_parser("surface", help="E/3 grid for the three-qubit family")
    _add_common(p_surface, formats=("csv",))
    p_surface.add_argument("--gamma-start", type=float, default=0.0)
    p_surface.add_argument("--gamma-stop", type=float, default=float(np.pi))
    p_surface.add_argument("--tau-start", type=float, default=0.0)
    p_surface.add_argument("--tau-stop", type=float, default=float(np.pi))
    p_surface.add_argument("--points", type=int, required=True)
    p_surface.set_defaults(func=_cmd_surface)

    p_verify = sub.add_parser("verify", help="run the numeric oracle harness")
    _add_state_source(p_verify)
    _add_common(p_verify, formats=("json",))
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except StateFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: invalid state: {exc}", file=sys.stderr)
        return EXIT_INVALID_STATE


if __name__ == "__main__":
    sys.exit(main())
