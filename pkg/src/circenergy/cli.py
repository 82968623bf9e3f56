"""Command-line client.

Each subcommand fills the same request model the HTTP service accepts
and runs it in process, so CLI output and service payloads always
agree.  Results stream as JSON lines (or CSV with --format csv), one
record per result row; --no-timestamp makes repeated runs byte
identical.

Exit codes: 0 success, 2 argument/validation error, 1 failed numerical
consistency check.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .ensembles import read_coefficients
from .schemas import (
    BoundsRequest,
    CompareRequest,
    ConvergenceRequest,
    DeviationRequest,
    DirichletRequest,
    EnergyRequest,
    ExpectedEnergyRequest,
    ToeplitzGapRequest,
)
from .spectral import NumericalError, Spectrum, write_spectrum
from . import runners
from .schemas import SCHEMA_VERSION


def _add_output_options(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=("json", "csv"), default="json",
                    help="output format (default json, one record per line)")
    sp.add_argument("--out", type=Path, default=None,
                    help="write records to this file instead of stdout")
    sp.add_argument("--no-timestamp", action="store_true",
                    help="omit timestamps so repeated runs are byte-identical")


def _add_run_options(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--seed", type=int, default=0,
                    help="base seed (SPECTRAL_SEED env var overrides)")
    sp.add_argument("--threads", type=int, default=0,
                    help="worker threads for trials, 0 = auto")


def _resolve_seed(args: argparse.Namespace) -> int:
    env = os.environ.get("SPECTRAL_SEED")
    if env is None:
        return args.seed
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"SPECTRAL_SEED must be an integer, got {env!r}") from None


def _parse_floats(text: str, what: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"could not parse {what} {text!r} as comma-separated reals") from None


def _parse_schedule(text: str) -> list[tuple[int, int]]:
    points = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            n, b = part.split(":")
            points.append((int(n), int(b)))
        except ValueError:
            raise ValueError(f"schedule entries are N:B pairs, got {part!r}") from None
    if not points:
        raise ValueError("schedule is empty")
    return points


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circenergy",
        description="Trace-norm energy of random band circulant and Toeplitz matrices",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("energy", help="energy of one matrix from a coefficient vector")
    sp.add_argument("--kind", choices=("circulant", "toeplitz"), default="circulant")
    sp.add_argument("--method", choices=("auto", "direct", "fft", "dense"), default="auto")
    sp.add_argument("--n", type=int, required=True, help="matrix size")
    sp.add_argument("--coeffs", type=Path, help="coefficient file (.json array or one-column CSV)")
    sp.add_argument("--values", help="inline comma-separated coefficients")
    sp.add_argument("--spectrum-out", type=Path, default=None,
                    help="also write the eigenvalues to this file (.json or CSV)")
    _add_output_options(sp)

    sp = sub.add_parser("expected-energy", help="expected normalized energy (MC or exact)")
    sp.add_argument("--method", choices=("mc", "exact"), default="mc")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--dist", default="bernoulli:0.5",
                    help="bernoulli:p | uniform:lo:hi | gaussian:mu:sigma")
    sp.add_argument("--trials", type=int, default=1000)
    _add_run_options(sp)
    _add_output_options(sp)

    sp = sub.add_parser("bounds", help="closed-form bound report for one theorem")
    sp.add_argument("--theorem", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--dist", default="bernoulli:0.5")
    sp.add_argument("--delta", type=float, default=0.0, help="deviation (theorem 2)")
    sp.add_argument("--R", "--support-bound", dest="support_bound",
                    type=float, default=None,
                    help="override the support bound R (theorem 2)")
    sp.add_argument("--c1", type=float, default=None,
                    help="override the Berry-Esseen constant (theorem 1)")
    _add_output_options(sp)

    sp = sub.add_parser("dirichlet", help="Lebesgue constants and total variation per order")
    sp.add_argument("--b-range", default="1:10", help="LO:HI inclusive order range")
    sp.add_argument("--tol", type=float, default=1e-9, help="quadrature tolerance")
    _add_output_options(sp)

    sp = sub.add_parser("deviation", help="empirical tail vs concentration bound")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--dist", default="bernoulli:0.5")
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--deltas", default=None,
                    help="comma-separated deviations; default is a ladder around delta0")
    _add_run_options(sp)
    _add_output_options(sp)

    sp = sub.add_parser("convergence", help="estimate vs limit across an (n, b) schedule")
    sp.add_argument("--schedule", required=True, help="comma-separated N:B pairs")
    sp.add_argument("--dist", default="bernoulli:0.5")
    sp.add_argument("--trials", type=int, default=200)
    _add_run_options(sp)
    _add_output_options(sp)

    sp = sub.add_parser("compare", help="limit constants of related ensembles")
    sp.add_argument("--p", type=float, default=0.5)
    sp.add_argument("--d", type=int, default=3)
    sp.add_argument("--sigma", type=float, default=1.0)
    sp.add_argument("--n", type=int, default=None)
    _add_output_options(sp)

    sp = sub.add_parser("toeplitz-gap", help="coupled circulant vs Toeplitz energy gap")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--dist", default="bernoulli:0.5")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--cap", type=int, default=4096, help="dense eigensolver size cap")
    _add_run_options(sp)
    _add_output_options(sp)

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)

    return parser


def _cmd_energy(args) -> list[dict]:
    if (args.coeffs is None) == (args.values is None):
        raise ValueError("provide exactly one of --coeffs or --values")
    if args.coeffs is not None:
        values = list(read_coefficients(args.coeffs).values)
    else:
        values = _parse_floats(args.values, "coefficients")
    req = EnergyRequest(
        kind=args.kind,
        method=args.method,
        n=args.n,
        coefficients=values,
        include_spectrum=args.spectrum_out is not None,
    )
    resp = runners.run_energy(req)
    if args.spectrum_out is not None:
        write_spectrum(args.spectrum_out, Spectrum(np.asarray(resp.eigenvalues)))
    return [{
        "version": SCHEMA_VERSION,
        "command": "energy",
        "params": {"kind": resp.kind, "method": resp.method, "n": resp.n, "b": resp.b},
        "energy": resp.energy,
        "normalized": resp.normalized,
    }]


def _cmd_expected_energy(args) -> list[dict]:
    req = ExpectedEnergyRequest(
        method=args.method, n=args.n, b=args.b, dist=args.dist,
        trials=args.trials, seed=_resolve_seed(args), threads=args.threads,
    )
    resp = runners.run_expected_energy(req)
    return [{
        "version": SCHEMA_VERSION,
        "command": "expected-energy",
        "params": {"method": resp.method, "n": resp.n, "b": resp.b,
                   "dist": resp.dist, "trials": resp.trials},
        "seed": resp.seed,
        "estimate": resp.estimate,
        "stderr": resp.stderr,
        "raw_mean": resp.raw_mean,
        "bounds": {"limit": resp.limit, "limit_gap": resp.limit_gap},
    }]


def _cmd_bounds(args) -> list[dict]:
    req = BoundsRequest(
        theorem=args.theorem, n=args.n, b=args.b, dist=args.dist,
        delta=args.delta, support_bound=args.support_bound, c1=args.c1,
    )
    resp = runners.run_bounds(req)
    return [{
        "version": SCHEMA_VERSION,
        "command": "bounds",
        "theorem": resp.theorem,
        "inputs": resp.inputs,
        "terms": resp.terms,
        "total": resp.total,
    }]


def _cmd_dirichlet(args) -> list[dict]:
    try:
        lo, hi = (int(s) for s in args.b_range.split(":"))
    except ValueError:
        raise ValueError(f"--b-range takes LO:HI, got {args.b_range!r}") from None
    resp = runners.run_dirichlet(DirichletRequest(b_lo=lo, b_hi=hi, tol=args.tol))
    return [{
        "version": SCHEMA_VERSION,
        "command": "dirichlet",
        "b": row.b,
        "lebesgue": row.lebesgue,
        "lebesgue_bound": row.lebesgue_bound,
        "total_variation": row.total_variation,
        "tv_bound": row.tv_bound,
    } for row in resp.rows]


def _cmd_deviation(args) -> list[dict]:
    deltas = _parse_floats(args.deltas, "deltas") if args.deltas is not None else None
    req = DeviationRequest(
        n=args.n, b=args.b, dist=args.dist, trials=args.trials,
        deltas=deltas, seed=_resolve_seed(args), threads=args.threads,
    )
    resp = runners.run_deviation(req)
    params = {"n": resp.n, "b": resp.b, "dist": resp.dist, "trials": resp.trials}
    return [{
        "version": SCHEMA_VERSION,
        "command": "deviation",
        "params": params,
        "seed": resp.seed,
        "delta": point.delta,
        "empirical": point.empirical,
        "bounds": {"tail": point.bound, "delta0": resp.delta0},
        "mean_normalized": resp.mean_normalized,
    } for point in resp.points]


def _cmd_convergence(args) -> list[dict]:
    req = ConvergenceRequest(
        schedule=_parse_schedule(args.schedule), dist=args.dist,
        trials=args.trials, seed=_resolve_seed(args), threads=args.threads,
    )
    resp = runners.run_convergence(req)
    return [{
        "version": SCHEMA_VERSION,
        "command": "convergence",
        "params": {"n": point.n, "b": point.b, "dist": resp.dist, "trials": resp.trials},
        "seed": resp.seed,
        "estimate": point.estimate,
        "stderr": point.stderr,
        "bounds": {"limit": resp.limit, "deviation": point.deviation,
                   "convergence_rhs": point.bound},
    } for point in resp.points]


def _cmd_compare(args) -> list[dict]:
    resp = runners.run_compare(CompareRequest(p=args.p, d=args.d, sigma=args.sigma, n=args.n))
    records = []
    for row in resp.rows:
        record = {
            "version": SCHEMA_VERSION,
            "command": "compare",
            "ensemble": row.ensemble,
            "normalizer": row.normalizer,
            "constant": row.constant,
        }
        if row.constant_hi is not None:
            record["constant_hi"] = row.constant_hi
        records.append(record)
    return records


def _cmd_toeplitz_gap(args) -> list[dict]:
    req = ToeplitzGapRequest(
        n=args.n, b=args.b, dist=args.dist, trials=args.trials,
        seed=_resolve_seed(args), cap=args.cap, threads=args.threads,
    )
    resp = runners.run_toeplitz_gap(req)
    return [{
        "version": SCHEMA_VERSION,
        "command": "toeplitz-gap",
        "params": {"n": resp.n, "b": resp.b, "dist": resp.dist, "trials": resp.trials},
        "seed": resp.seed,
        "estimate": resp.mean_normalized_gap,
        "max_corner_ratio": resp.max_corner_ratio,
        "bounds": {"thm3_exact": resp.thm3_exact, "thm3_coarse": resp.thm3_coarse},
    }]


_DISPATCH = {
    "energy": _cmd_energy,
    "expected-energy": _cmd_expected_energy,
    "bounds": _cmd_bounds,
    "dirichlet": _cmd_dirichlet,
    "deviation": _cmd_deviation,
    "convergence": _cmd_convergence,
    "compare": _cmd_compare,
    "toeplitz-gap": _cmd_toeplitz_gap,
}


def _flatten(record: dict, prefix: str = "") -> dict:
    flat = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, name + "."))
        elif isinstance(value, (list, tuple)):
            flat[name] = json.dumps(value)
        else:
            flat[name] = value
    return flat


def _render(records: list[dict], fmt: str, stamp: str | None) -> str:
    if stamp is not None:
        records = [{**record, "timestamp": stamp} for record in records]
    if fmt == "json":
        return "".join(json.dumps(record) + "\n" for record in records)
    flat = [_flatten(record) for record in records]
    columns: list[str] = []
    for row in flat:
        for key in row:
            if key not in columns:
                columns.append(key)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, restval="")
    writer.writeheader()
    writer.writerows(flat)
    return buf.getvalue()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0
    try:
        records = _DISPATCH[args.command](args)
        stamp = None if args.no_timestamp else datetime.now(timezone.utc).isoformat()
        text = _render(records, args.format, stamp)
        if args.out is not None:
            args.out.write_text(text)
        else:
            sys.stdout.write(text)
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
