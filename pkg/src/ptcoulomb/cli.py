"""Command-line front end.

Every command writes one table to stdout as JSON (an object with
``schema_version``, ``command``, ``params`` and ``rows``) or CSV (header plus
rows).  Floats are written with ``repr`` so they round-trip exactly; complex
values are split into real and imaginary columns.  Warnings and failed
checks go to stderr.

Exit codes: 0 success, 1 failed verification or non-convergence,
2 bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import sys

import numpy as np

from . import model, pseudonorm, verification
from .model import AdmissibilityError, ModelParams, StateLabel
from .quadrature import ConvergenceError
from .shooting import BracketError, StepSizeError
from .special import DomainError

SCHEMA_VERSION = "1.0"
DEFAULTS = {"alpha": 0.25, "beta": -1.0, "c": 1.0, "n_max": 3}


class UsageError(Exception):
    pass


def _plain(value):
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, enum.Enum):
        return value.value
    return value


def _csv_field(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render(command, params: ModelParams, rows: list[dict], fmt: str) -> str:
    rows = [{k: _plain(v) for k, v in row.items()} for row in rows]
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "params": {"alpha": params.alpha, "beta": params.beta, "c": params.c},
            "rows": rows,
        }
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if rows:
        writer.writerow(rows[0].keys())
        for row in rows:
            writer.writerow([_csv_field(v) for v in row.values()])
    return buf.getvalue()


def _spectrum(args, params):
    rows = []
    for entry in model.list_spectrum(params, args.n_max):
        state = entry.state
        rows.append({
            "q": entry.label.q,
            "n": entry.label.n,
            "admissibility": entry.status,
            "energy": state.energy if state else None,
            "gamma": state.gamma if state else None,
            "norm_magnitude": state.norm_magnitude if state else None,
        })
    return rows, 0


def _wavefunc(args, params):
    if args.points < 2 or args.x_min >= args.x_max:
        raise UsageError("need --points >= 2 and --x-min < --x-max")
    label = StateLabel(args.q, args.n)
    xs = np.linspace(args.x_min, args.x_max, args.points)
    psi = model.wavefunction(params, label, xs, normalized=not args.unnormalized)
    rows = [
        {"x": float(x), "re_psi": float(p.real), "im_psi": float(p.imag), "abs_psi": float(abs(p))}
        for x, p in zip(xs, psi)
    ]
    return rows, 0


_NORM_METHODS = {
    "closed": lambda p, l: pseudonorm.pseudo_norm_closed(p, l),
    "half-line": lambda p, l: pseudonorm.pseudo_norm_quadrature(p, l, "half_line"),
    "real-line": lambda p, l: pseudonorm.pseudo_norm_quadrature(p, l, "real_line"),
}


def _norm(args, params):
    label = StateLabel(args.q, args.n)
    model.require_admissible(params, label)
    methods = list(_NORM_METHODS) if args.method == "all" else [args.method]
    results = []
    for name in methods:
        try:
            results.append(_NORM_METHODS[name](params, label))
        except DomainError as exc:
            print(f"warning: {name}: {exc}", file=sys.stderr)
    if not results:
        raise UsageError("no pseudo-norm method applies to this state")
    reference = results[0].value
    rows = []
    for res in results:
        delta = abs(res.value - reference) / abs(reference)
        if delta > 1e-8:
            print(f"warning: {res.method.value} differs from {results[0].method.value} "
                  f"by relative {delta:.3e}", file=sys.stderr)
        rows.append({
            "method": res.method,
            "value": res.value,
            "sigma": res.sigma,
            "norm_magnitude": res.value ** -0.5 if res.value > 0 else None,
            "imag_residual": res.imag_residual,
            "rel_delta": delta,
        })
    return rows, 0


def _verify(args, params):
    outcomes = verification.run_suite(params, args.n_max, args.suite)
    rows = []
    for o in outcomes:
        rows.append({"suite": o.suite, "check": o.name, "measured": float(o.measured),
                     "threshold": o.threshold, "passed": o.passed})
        if not o.passed:
            print(f"FAILED {o.suite}: {o.name} (measured {o.measured!r}, threshold {o.threshold!r})",
                  file=sys.stderr)
    return rows, 0 if all(o.passed for o in outcomes) else 1


def parse_grid(text: str) -> list[float]:
    """'a:b:step' -> [a, a + step, ..., b], endpoint included when hit."""
    try:
        a, b, step = (float(part) for part in text.split(":"))
    except ValueError:
        raise UsageError(f"alpha grid must look like a:b:step, got {text!r}") from None
    if step <= 0 or b < a:
        raise UsageError("alpha grid needs step > 0 and a <= b")
    count = int(np.floor((b - a) / step + 1e-9)) + 1
    return [a + k * step for k in range(count)]


def _sweep(args, params):
    rows = []
    for alpha, value in verification.alpha_sweep(params.beta, args.q, args.n,
                                                 parse_grid(args.alpha_grid), params.c):
        flagged = isinstance(value, model.Admissibility)
        rows.append({
            "alpha": alpha,
            "admissibility": value if flagged else model.Admissibility.ADMISSIBLE,
            "energy": None if flagged else value,
        })
    return rows, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptcoulomb",
        description="PT-symmetric one-dimensional Coulomb model: spectra, "
                    "wavefunctions, pseudo-norms and numerical checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, default=DEFAULTS["alpha"])
    common.add_argument("--beta", type=float, default=DEFAULTS["beta"])
    common.add_argument("--c", type=float, default=DEFAULTS["c"], help="contour shift")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    state = argparse.ArgumentParser(add_help=False)
    state.add_argument("--q", type=int, choices=(1, -1), required=True)
    state.add_argument("--n", type=int, required=True)

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("spectrum", parents=[common], help="both quasi-parity families")
    p.add_argument("--n-max", type=int, default=DEFAULTS["n_max"])
    p.set_defaults(run=_spectrum)

    p = sub.add_parser("wavefunc", parents=[common, state], help="sample a wavefunction")
    p.add_argument("--x-min", type=float, default=-10.0)
    p.add_argument("--x-max", type=float, default=10.0)
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--unnormalized", action="store_true")
    p.set_defaults(run=_wavefunc)

    p = sub.add_parser("norm", parents=[common, state], help="pseudo-norm by each method")
    p.add_argument("--method", choices=("closed", "half-line", "real-line", "all"), default="all")
    p.set_defaults(run=_norm)

    p = sub.add_parser("verify", parents=[common], help="run numerical checks")
    p.add_argument("--suite", choices=(*verification.SUITES, "all"), default="all")
    p.add_argument("--n-max", type=int, default=DEFAULTS["n_max"])
    p.set_defaults(run=_verify)

    p = sub.add_parser("sweep", parents=[common, state], help="energy across an alpha grid")
    p.add_argument("--alpha-grid", required=True, metavar="A:B:STEP")
    p.set_defaults(run=_sweep)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "n_max", 0) < 0 or getattr(args, "n", 0) < 0:
            raise UsageError("radial indices must be non-negative")
        params = ModelParams(args.alpha, args.beta, args.c)
        rows, code = args.run(args, params)
    except (BracketError, ConvergenceError, StepSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, AdmissibilityError, DomainError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(args.command, params, rows, args.format))
    return code


def main():
    sys.exit(run_cli())
