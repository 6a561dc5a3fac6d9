"""Command-line front end.

Subcommands: measure, alpha-sweep, decompose, oracle, scan.  State files are
UTF-8 JSON with exactly one of a "matrix" (4x4 row-major) or a "pauli" map
from two-letter labels over {I, X, Z} plus "YY" to real coefficients.

Exit codes: 0 success, 2 parse/usage error, 3 state validation failure,
4 unwritable output, 5 oracle gap violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import __version__
from .ensembles import brute_force_min_eof, flatten
from .measures import (
    TOL_C,
    concurrence_real,
    eof_real,
    measure_report,
    peres_min_eig,
    wootters_concurrence,
)
from .linalg import NotPSDError
from .states import (
    SIGMA_YY,
    SYM_LABELS,
    DensityOperator,
    PauliCoordinates,
    StateValidationError,
    alpha_state,
    from_pauli,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_OUTPUT = 4
EXIT_GAP = 5

ALLOWED_PAULI = set(SYM_LABELS) | {"YY"}


class StateFileError(ValueError):
    """The state file could not be parsed."""


def load_state(path: str) -> DensityOperator:
    """Parse a state file into a validated DensityOperator.

    Raises StateFileError on malformed input and StateValidationError (or
    NotPSDError) when the parsed operator violates a state invariant.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise StateFileError(f"cannot read state file {path!r}: {exc}") from exc
    if not isinstance(data, dict):
        raise StateFileError("state file must be a JSON object")
    has_matrix = "matrix" in data
    has_pauli = "pauli" in data
    if has_matrix == has_pauli:
        raise StateFileError("state file must contain exactly one of 'matrix' or 'pauli'")
    if has_matrix:
        try:
            m = np.array(data["matrix"], dtype=float)
        except (TypeError, ValueError) as exc:
            raise StateFileError(f"bad matrix entries: {exc}") from exc
        if m.shape != (4, 4):
            raise StateFileError(f"matrix must be 4x4, got shape {m.shape}")
        return DensityOperator(m)
    pauli = data["pauli"]
    if not isinstance(pauli, dict):
        raise StateFileError("'pauli' must be a map of labels to coefficients")
    sym = {}
    yy = 0.0
    for label, value in pauli.items():
        if label not in ALLOWED_PAULI:
            raise StateFileError(
                f"disallowed Pauli label {label!r}: only {sorted(ALLOWED_PAULI)} can appear "
                "for a real state"
            )
        try:
            value = float(value)
        except (TypeError, ValueError) as exc:
            raise StateFileError(f"coefficient for {label!r} is not a number") from exc
        if label == "YY":
            yy = value
        else:
            sym[label] = value
    return from_pauli(PauliCoordinates(sym=sym, yy=yy))


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _report_fields(rho: DensityOperator) -> dict:
    rep = measure_report(rho)
    return {
        "concurrence_real": rep.concurrence_real,
        "wootters_concurrence": rep.wootters_concurrence,
        "eof_real": rep.eof_real,
        "eof_complex": rep.eof_complex,
        "tau_1": rep.tau_spectrum[0],
        "tau_2": rep.tau_spectrum[1],
        "tau_3": rep.tau_spectrum[2],
        "tau_4": rep.tau_spectrum[3],
        "pt_min_eig": rep.pt_min_eig,
        "classification": rep.classification,
    }


def cmd_measure(args) -> int:
    rho = load_state(args.input)
    fields = _report_fields(rho)
    if args.format == "text":
        for key, value in fields.items():
            if isinstance(value, float):
                print(f"{key}: {value:.6g}")
            else:
                print(f"{key}: {value}")
    elif args.format == "json":
        payload = dict(fields)
        payload["matrix"] = [[float(x) for x in row] for row in rho.mat]
        json.dump(payload, sys.stdout)
        print()
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(fields.keys())
        writer.writerow(_fmt(v) if isinstance(v, float) else v for v in fields.values())
    return EXIT_OK


def _write_csv(path: str, header: list, rows: list) -> int:
    """Write atomically: temp file in the target directory, renamed on success."""
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".csv")
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
        os.replace(tmp, path)
    except OSError as exc:
        print(f"error: cannot write {path!r}: {exc}", file=sys.stderr)
        return EXIT_OUTPUT
    return EXIT_OK


def cmd_alpha_sweep(args) -> int:
    rows = []
    for k in range(args.steps):
        alpha = k / (args.steps - 1)
        rho = alpha_state(alpha)
        c = concurrence_real(rho)
        cw = wootters_concurrence(rho)
        rows.append(
            [
                _fmt(alpha),
                _fmt(c),
                _fmt(cw),
                _fmt(eof_real(rho)),
                _fmt(peres_min_eig(rho)),
                measure_report(rho).classification,
            ]
        )
    return _write_csv(args.output, ["alpha", "C", "C_W", "E_R", "pt_min_eig", "classification"], rows)


def cmd_decompose(args) -> int:
    rho = load_state(args.input)
    result = flatten(rho)
    members = result.ensemble.members
    probs = result.ensemble.probabilities
    print(f"target_preconcurrence: {result.target:.6g}")
    for j, (w, p) in enumerate(zip(members, probs), start=1):
        if p > 1e-14:
            c = float(w @ SIGMA_YY @ w) / p
            amps = " ".join(f"{x:.6g}" for x in w / math.sqrt(p))
        else:
            c = 0.0
            amps = " ".join(f"{x:.6g}" for x in w)
        print(f"member {j}: p={p:.6g} preconcurrence={c:.6g} amplitudes=[{amps}]")
    print(f"iterations: {result.iterations}")
    print(f"max_deviation: {result.max_deviation:.3g}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    rho = load_state(args.input)
    closed = eof_real(rho)
    value, _ = brute_force_min_eof(rho, m=args.m, restarts=args.restarts, seed=args.seed)
    gap = value - closed
    print(f"closed_form={_fmt(closed)} oracle={_fmt(value)} gap={gap:.6g}")
    if -1e-9 <= gap <= 1e-3:
        return EXIT_OK
    print("error: oracle gap outside [-1e-9, 1e-3]", file=sys.stderr)
    return EXIT_GAP


def _sample_near_mixed(epsilon: float, rng: np.random.Generator) -> DensityOperator:
    """Maximally mixed state plus a random trace-zero symmetric perturbation of
    Frobenius norm epsilon, resampled until PSD."""
    for _ in range(100000):
        g = rng.standard_normal((4, 4))
        delta = 0.5 * (g + g.T)
        delta -= np.trace(delta) / 4.0 * np.eye(4)
        delta *= epsilon / np.linalg.norm(delta)
        try:
            return DensityOperator(np.eye(4) / 4.0 + delta)
        except ValueError:
            continue
    raise RuntimeError(f"could not sample a PSD perturbation at epsilon={epsilon}")


def cmd_scan(args) -> int:
    rng = np.random.default_rng(args.seed)
    header = [
        "epsilon",
        "fraction_real_entangled",
        "fraction_complex_entangled",
        "witness_alpha",
        "witness_C",
        "witness_C_W",
        "witness_pt_min_eig",
    ]
    rows = []
    for epsilon in args.epsilons:
        n_real = 0
        n_complex = 0
        for _ in range(args.samples):
            rho = _sample_near_mixed(epsilon, rng)
            if concurrence_real(rho) > TOL_C:
                n_real += 1
            if peres_min_eig(rho) < -TOL_C:
                n_complex += 1
        witness_alpha = min(2.0 * epsilon, 1.0)
        witness = alpha_state(witness_alpha)
        rows.append(
            [
                _fmt(epsilon),
                _fmt(n_real / args.samples),
                _fmt(n_complex / args.samples),
                _fmt(witness_alpha),
                _fmt(concurrence_real(witness)),
                _fmt(wootters_concurrence(witness)),
                _fmt(peres_min_eig(witness)),
            ]
        )
    if args.output:
        return _write_csv(args.output, header, rows)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return EXIT_OK


def _epsilon_list(text: str) -> list:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad epsilon list: {exc}") from exc
    if not values:
        raise argparse.ArgumentTypeError("epsilon list is empty")
    for v in values:
        if not 0.0 < v <= 1.0:
            raise argparse.ArgumentTypeError(f"epsilon {v} outside (0, 1]")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rebits",
        description="Entanglement measures for two-rebit states (real 4x4 density operators).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="print the measure report of a state file")
    p.add_argument("--input", required=True, help="state file (JSON)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("alpha-sweep", help="tabulate the alpha family of bound real-entangled states")
    p.add_argument("--steps", type=int, required=True, help="number of alpha grid points (>= 2)")
    p.add_argument("--output", required=True, help="CSV output path")
    p.set_defaults(func=cmd_alpha_sweep)

    p = sub.add_parser("decompose", help="print the optimal (flattened) ensemble of a state")
    p.add_argument("--input", required=True, help="state file (JSON)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("oracle", help="compare the closed-form EoF with brute-force minimization")
    p.add_argument("--input", required=True, help="state file (JSON)")
    p.add_argument("--m", type=int, required=True, help="ensemble size (rank..8)")
    p.add_argument("--restarts", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("scan", help="entanglement fractions near the maximally mixed state")
    p.add_argument("--epsilons", type=_epsilon_list, required=True, help="comma-separated list in (0,1]")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--output", help="CSV output path (default: stdout)")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "alpha-sweep" and args.steps < 2:
        parser.error("--steps must be >= 2")
    if args.command == "oracle" and (args.m < 1 or args.m > 8 or args.restarts < 1):
        parser.error("--m must be in 1..8 and --restarts >= 1")
    if args.command == "scan" and args.samples < 1:
        parser.error("--samples must be >= 1")
    try:
        return args.func(args)
    except StateFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (StateValidationError, NotPSDError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
