"""Command-line front end: parameter sweeps, single points, randomized audits.

Exit status: 0 success, 1 usage error, 2 numerical failure (non-convergence
or a bound violation). CSV schema is versioned; efficiency is an empty cell
when the bound is numerically zero. All numbers carry 12 significant digits,
so re-running a sweep reproduces the output byte for byte.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional

import numpy as np

from .qmath import SIGMA_X, SIGMA_Z, BipartiteSpace, eig_hermitian, identity, tensor
from .thermo import Temperature
from .protocol import ProtocolInput, run_protocol, total_hamiltonian, verify_bound
from .rabi import ConvergenceError, RabiConfig, auto_converge

CSV_VERSION_LINE = "# thermowork-csv v1"
COLUMNS = [
    "g_over_omega",
    "work",
    "work_local_only",
    "bound",
    "efficiency",
    "ground_energy",
    "sz_mean",
    "n_mean",
    "hi_mean",
    "mi_term",
    "converged_cutoff",
]

MAX_SWEEP_POINTS = 100_000


class UsageError(Exception):
    pass


def format_number(x) -> str:
    """12 significant digits; lowercase scientific when |x| < 1e-4 or >= 1e6."""
    if x is None:
        return ""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    ax = abs(x)
    if ax != 0.0 and 1e-4 <= ax < 1e6:
        decimals = 11 - math.floor(math.log10(ax))
        return f"{x:.{decimals}f}"
    return f"{x:.11e}"


def _json_value(x):
    if x is None:
        return None
    if isinstance(x, (int, np.integer)):
        return int(x)
    return float(format_number(x))


def _row_csv(row: dict) -> str:
    return ",".join(format_number(row[c]) for c in COLUMNS)


def _row_json(row: dict) -> dict:
    return {c: _json_value(row[c]) for c in COLUMNS}


def _rabi_row(g: float, cutoff: int, temperature: Temperature, tol: float) -> dict:
    point = auto_converge(
        RabiConfig(
            g_over_omega=g,
            fock_cutoff=cutoff,
            temperature=temperature,
            convergence_tol=tol,
        )
    )
    if point.report is not None:
        work_local_only = point.report.work_local_only
        bound = point.report.bound
        mi_term = point.report.mi_term
    else:
        # T = 0: the t2 product ground state has <H_I> = 0, so the bound is
        # just -<H_I>_t3, and the mutual-information term vanishes.
        work_local_only = point.work
        bound = -point.hi_mean
        mi_term = 0.0
    return {
        "g_over_omega": g,
        "work": point.work,
        "work_local_only": work_local_only,
        "bound": bound,
        "efficiency": point.efficiency,
        "ground_energy": point.ground_energy,
        "sz_mean": point.sz_mean,
        "n_mean": point.n_mean,
        "hi_mean": point.hi_mean,
        "mi_term": mi_term,
        "converged_cutoff": point.converged_cutoff,
    }


def _protocol_row(g: float, inp: ProtocolInput) -> dict:
    report = run_protocol(inp)
    ground = eig_hermitian(total_hamiltonian(inp)).ground_energy
    return {
        "g_over_omega": g,
        "work": report.work,
        "work_local_only": report.work_local_only,
        "bound": report.bound,
        "efficiency": report.efficiency,
        "ground_energy": ground,
        "sz_mean": None,
        "n_mean": None,
        "hi_mean": report.hi_t3,
        "mi_term": report.mi_term,
        "converged_cutoff": None,
    }


def _two_qubit_input(g: float, temperature: Temperature) -> ProtocolInput:
    h_a = 0.5 * SIGMA_Z
    h_i = g * tensor(SIGMA_X, SIGMA_X)
    return ProtocolInput(h_a, h_a.copy(), h_i, temperature, BipartiteSpace(2, 2))


def load_custom_model(path: str):
    """Parse the JSON custom-model file: matrices as nested [re, im] pairs."""
    with open(path) as fh:
        data = json.load(fh)
    try:
        d_a = int(data["d_a"])
        d_b = int(data["d_b"])
        mats = {}
        for key in ("h_a", "h_b", "h_i"):
            raw = np.asarray(data[key], dtype=float)
            if raw.ndim != 3 or raw.shape[0] != raw.shape[1] or raw.shape[2] != 2:
                raise UsageError(f"{key}: expected a square matrix of [re, im] pairs")
            mats[key] = raw[..., 0] + 1j * raw[..., 1]
        file_temperature = float(data.get("temperature", 0.0))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"invalid custom model file {path}: {exc}") from exc
    space = BipartiteSpace(d_a, d_b)
    if mats["h_a"].shape[0] != d_a or mats["h_b"].shape[0] != d_b:
        raise UsageError("custom model dimensions inconsistent with d_a/d_b")
    if mats["h_i"].shape[0] != space.dim:
        raise UsageError("custom model h_i dimension inconsistent with d_a*d_b")
    return mats["h_a"], mats["h_b"], mats["h_i"], space, file_temperature


def _build_row(args, g: float, temperature: Temperature, custom=None) -> dict:
    if args.model == "rabi":
        return _rabi_row(g, args.cutoff, temperature, args.tol)
    if args.model == "two_qubit":
        return _protocol_row(g, _two_qubit_input(g, temperature))
    h_a, h_b, h_i, space, _ = custom
    try:
        inp = ProtocolInput(h_a, h_b, g * h_i, temperature, space)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return _protocol_row(g, inp)


def _resolve_temperature(args, custom=None) -> Temperature:
    if args.temperature is not None:
        return Temperature(args.temperature)
    if custom is not None:
        return Temperature(custom[4])
    return Temperature.zero()


def _emit(rows: list[dict], fmt: str, out: Optional[str]) -> None:
    if fmt == "csv":
        lines = [CSV_VERSION_LINE, ",".join(COLUMNS)]
        lines += [_row_csv(r) for r in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps([_row_json(r) for r in rows], indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write output file {out}: {exc}") from exc


def cmd_sweep(args) -> int:
    if args.g_step <= 0:
        raise UsageError("--g-step must be positive")
    if not args.g_start < args.g_stop:
        raise UsageError("--g-start must be below --g-stop")
    n_points = (args.g_stop - args.g_start) / args.g_step
    if n_points > MAX_SWEEP_POINTS:
        raise UsageError(f"sweep exceeds {MAX_SWEEP_POINTS} points")

    custom = load_custom_model(args.file) if args.model == "custom" else None
    if args.model == "custom" and custom is None:
        raise UsageError("--model custom requires --file")
    temperature = _resolve_temperature(args, custom)

    values = []
    k = 0
    while True:
        g = round(args.g_start + k * args.g_step, 12)
        if g > args.g_stop + 1e-9 * args.g_step:
            break
        values.append(g)
        k += 1

    rows = []
    failures = []
    for g in values:
        try:
            rows.append(_build_row(args, g, temperature, custom))
        except ConvergenceError as exc:
            failures.append((g, str(exc)))
            rows.append({c: (g if c == "g_over_omega" else None) for c in COLUMNS})
    _emit(rows, args.format, args.out)
    if failures:
        for g, msg in failures:
            print(f"sweep: point g/omega = {g:g} failed: {msg}", file=sys.stderr)
        print(f"sweep: {len(failures)} of {len(values)} points failed", file=sys.stderr)
        return 2
    return 0


def cmd_point(args) -> int:
    custom = load_custom_model(args.file) if args.model == "custom" else None
    temperature = _resolve_temperature(args, custom)
    row = _build_row(args, args.g, temperature, custom)
    sys.stdout.write(json.dumps(_row_json(row), indent=2) + "\n")
    return 0


def random_hermitian(rng: np.random.Generator, dim: int, norm: Optional[float] = None) -> np.ndarray:
    m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    h = 0.5 * (m + m.conj().T)
    if norm is not None:
        spectral = np.abs(np.linalg.eigvalsh(h)).max()
        if spectral > 0:
            h *= norm / spectral
    return h


def cmd_audit(args) -> int:
    temperature = Temperature(args.temperature if args.temperature is not None else 1.0)
    d_a, d_b = args.dims
    rng = np.random.default_rng(args.seed)
    space = BipartiteSpace(d_a, d_b)
    margins = []
    violations = 0
    for _ in range(args.count):
        h_a = random_hermitian(rng, d_a)
        h_b = random_hermitian(rng, d_b)
        h_i = random_hermitian(rng, space.dim, norm=rng.uniform(0.1, 2.0))
        ok, margin = verify_bound(ProtocolInput(h_a, h_b, h_i, temperature, space))
        margins.append(margin)
        if not ok:
            violations += 1
    margins = np.asarray(margins)
    print(f"samples: {args.count}")
    print(f"dims: {d_a}x{d_b}")
    print(f"temperature: {format_number(temperature.value)}")
    print(f"min margin: {format_number(float(margins.min()))}")
    print(f"median margin: {format_number(float(np.median(margins)))}")
    print(f"violations: {violations}")
    return 0 if violations == 0 else 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _audit_dim(text: str) -> int:
    value = int(text)
    if not 2 <= value <= 6:
        raise argparse.ArgumentTypeError("audit dimensions must be in [2, 6]")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="thermowork", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model_flags(p, sweep: bool):
        p.add_argument("--model", choices=["rabi", "two_qubit", "custom"], default="rabi")
        p.add_argument("--temperature", type=float, default=None,
                       help="bath temperature in units hbar*omega/k_B; 0 selects the exact T=0 branch")
        p.add_argument("--cutoff", type=_positive_int, default=16,
                       help="starting Fock cutoff for the rabi model")
        p.add_argument("--tol", type=float, default=1e-8,
                       help="cutoff-doubling convergence tolerance")
        p.add_argument("--file", default=None, help="custom model JSON file")
        if sweep:
            p.add_argument("--g-start", type=float, required=True)
            p.add_argument("--g-stop", type=float, required=True)
            p.add_argument("--g-step", type=float, required=True)
            p.add_argument("--format", choices=["csv", "json"], default="csv")
            p.add_argument("--out", default=None, help="output path (default: stdout)")
        else:
            p.add_argument("--g", type=float, default=1.0,
                           help="coupling g/omega (scales h_i for custom models)")

    p_sweep = sub.add_parser("sweep", help="parameter sweep with CSV/JSON output")
    add_model_flags(p_sweep, sweep=True)
    p_sweep.set_defaults(func=cmd_sweep)

    p_point = sub.add_parser("point", help="single evaluation, JSON to stdout")
    add_model_flags(p_point, sweep=False)
    p_point.set_defaults(func=cmd_point)

    p_audit = sub.add_parser("audit", help="randomized work-bound audit")
    p_audit.add_argument("--count", type=_positive_int, required=True)
    p_audit.add_argument("--dims", type=_audit_dim, nargs=2, default=[2, 2],
                         metavar=("D_A", "D_B"))
    p_audit.add_argument("--temperature", type=float, default=None)
    p_audit.add_argument("--seed", type=int, default=0)
    p_audit.set_defaults(func=cmd_audit)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "model", None) == "custom" and args.file is None:
            raise UsageError("--model custom requires --file")
        return args.func(args)
    except UsageError as exc:
        print(f"thermowork: error: {exc}", file=sys.stderr)
        return 1
    except ConvergenceError as exc:
        print(f"thermowork: numerical failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"thermowork: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
