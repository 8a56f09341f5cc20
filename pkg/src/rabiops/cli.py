"""Command-line entry point: ``rabiops <command> [options]``.

Exit status is 0 on success, 1 when a check fails and 2 on usage or
validation errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import dynamics, spectra, sweep, verify
from .hilbert import make_space
from .operators import standard_operators
from .params import ModelParams, ParameterError, validate
from .symbolic import ParseError, normal_order

COMMANDS = ("verify", "prove", "spectrum", "evolve", "sweep", "canon", "dump")
CONFIG_KEYS = {"omega": float, "omega0": float, "g": float, "r": float,
               "n_max": int, "margin": int, "tol": float}
DUMP_THRESHOLD = 1e-15


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    params: ModelParams = field(default_factory=ModelParams)
    n_max: int = 20
    margin: int = 2
    tol: float = 1e-12
    extra: dict = field(default_factory=dict)


def load_config(path: str) -> dict:
    """Read a strict JSON config; returns only the recognised keys."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"{path}: top level must be an object")
    for key, value in data.items():
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}: unknown key {key!r}")
        want = CONFIG_KEYS[key]
        ok = isinstance(value, int) if want is int else isinstance(value, (int, float))
        if isinstance(value, bool) or not ok:
            raise UsageError(f"{path}: {key} must be {'an integer' if want is int else 'a number'}")
    return data


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--omega", type=float)
    common.add_argument("--omega0", type=float)
    common.add_argument("--g", type=float)
    common.add_argument("--r", type=float)
    common.add_argument("--nmax", type=int, dest="n_max")
    common.add_argument("--margin", type=int)
    common.add_argument("--tol", type=float)
    common.add_argument("--config")
    common.add_argument("--out")

    p = argparse.ArgumentParser(prog="rabiops", description="Operator identities, spectra and dynamics "
                                "of the rotating and anti-rotating Rabi components.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="numeric identity suite, JSON report")
    sub.add_parser("prove", parents=[common], help="symbolic identity suite")
    s = sub.add_parser("spectrum", parents=[common], help="eigenvalues as CSV")
    s.add_argument("--model", choices=spectra.MODELS, required=True)
    e = sub.add_parser("evolve", parents=[common], help="expectation values along an evolution")
    e.add_argument("--model", choices=("jc", "ajc", "rabi"), required=True)
    e.add_argument("--state", default="0,g")
    e.add_argument("--tmax", type=float, required=True)
    e.add_argument("--dt", type=float, required=True)
    e.add_argument("--observables", default="N,Nbar,parity")
    w = sub.add_parser("sweep", parents=[common], help="phase factor along a coupling grid")
    w.add_argument("--g-from", type=float, required=True)
    w.add_argument("--g-to", type=float, required=True)
    w.add_argument("--steps", type=int, required=True)
    w.add_argument("--gap", action="store_true")
    c = sub.add_parser("canon", parents=[common], help="normal-ordered form of an expression")
    c.add_argument("expr")
    d = sub.add_parser("dump", parents=[common], help="nonzero matrix entries of an operator")
    d.add_argument("--op", required=True)
    return p


def _resolve(args: argparse.Namespace) -> RunConfig:
    values = load_config(args.config) if args.config else {}
    for key in CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    params = ModelParams(**{k: float(values[k]) for k in ("omega", "omega0", "g", "r") if k in values})
    validate(params)
    cfg = RunConfig(args.command, params,
                    values.get("n_max", 20), values.get("margin", 2), values.get("tol", 1e-12))
    if cfg.n_max < 2:
        raise UsageError("nmax must be >= 2")
    if not 0 <= cfg.margin <= cfg.n_max:
        raise UsageError("margin must lie in [0, nmax]")
    if not cfg.tol > 0:
        raise UsageError("tol must be positive")
    return cfg


def _csv_text(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_verify(cfg, args) -> int:
    reports = verify.run_numeric_suite(cfg.params, cfg.n_max, cfg.margin, cfg.tol)
    _emit(json.dumps(verify.report_json(cfg.params, reports), indent=2) + "\n", args.out)
    failed = [r.check_id for r in reports if not r.passed]
    for cid in failed:
        print(f"FAILED {cid}", file=sys.stderr)
    return 1 if failed else 0


def _cmd_prove(cfg, args) -> int:
    reports = verify.run_symbolic_suite()
    lines = []
    for r in reports:
        status = "PROVED" if r.passed else "FAILED"
        lines.append(f"{status} {r.check_id}" + ("" if r.passed else f" ({int(r.residual)} terms left)"))
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_spectrum(cfg, args) -> int:
    spec = spectra.numeric_spectrum(args.model, cfg.params, cfg.n_max)
    _emit(_csv_text(spectra.to_csv_rows(spec)), args.out)
    return 0


def _cmd_evolve(cfg, args) -> int:
    tag = f"rabi({cfg.params.r!r})" if args.model == "rabi" else args.model
    names = [s.strip() for s in args.observables.split(",") if s.strip()]
    traj = dynamics.conservation_trace(tag, names, args.state, args.tmax, args.dt, cfg.params, cfg.n_max)
    if traj.unreliable:
        print(f"warning: truncation leakage exceeds {dynamics.LEAKAGE_LIMIT:g}", file=sys.stderr)
    _emit(_csv_text(traj.to_csv_rows()), args.out)
    return 0


def _cmd_sweep(cfg, args) -> int:
    res = sweep.sweep_g(cfg.params, args.g_from, args.g_to, args.steps, cfg.n_max, cfg.margin, gap=args.gap)
    _emit(_csv_text(sweep.to_csv_rows(res)), args.out)
    best = res.best
    print(f"min phase_distance {best.phase_distance:.3e} at g={best.g!r}", file=sys.stderr)
    for c in res.crossings:
        label = "principal" if c.principal else f"k={c.k}"
        print(f"crossing beta^2-1={2 * c.k} in [{c.g_lo!r}, {c.g_hi!r}] ({label})", file=sys.stderr)
    return 0


def _cmd_canon(cfg, args) -> int:
    _emit(normal_order(args.expr).format() + "\n", args.out)
    return 0


def _cmd_dump(cfg, args) -> int:
    ops = standard_operators(make_space(cfg.n_max), cfg.params)
    if args.op not in ops:
        raise UsageError(f"unknown operator {args.op!r}; expected one of {', '.join(ops)}")
    m = ops[args.op].data
    rows = [["row", "col", "re", "im"]]
    for i, j in zip(*np.nonzero(np.abs(m) > DUMP_THRESHOLD)):
        z = m[i, j]
        rows.append([str(i), str(j), repr(float(z.real)), repr(float(z.imag))])
    _emit(_csv_text(rows), args.out)
    return 0


_HANDLERS = {
    "verify": _cmd_verify, "prove": _cmd_prove, "spectrum": _cmd_spectrum, "evolve": _cmd_evolve,
    "sweep": _cmd_sweep, "canon": _cmd_canon, "dump": _cmd_dump,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _resolve(args)
        return _HANDLERS[args.command](cfg, args)
    except (UsageError, ParameterError, ParseError, ValueError) as exc:
        print(f"rabiops {args.command}: error: {exc}", file=sys.stderr)
        return 2
