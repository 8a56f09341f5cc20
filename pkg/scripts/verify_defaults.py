"""Run both identity engines at one parameter point and cross-check them.

    python3 scripts/verify_defaults.py --g 0.1 --out results/verify.json
"""
import argparse
import json
import sys
from pathlib import Path

from rabiops.params import ModelParams
from rabiops.verify import cross_check, report_json, run_numeric_suite, run_symbolic_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--omega", type=float, default=1.0)
    ap.add_argument("--omega0", type=float, default=1.0)
    ap.add_argument("--g", type=float, default=0.1)
    ap.add_argument("--nmax", type=int, default=20)
    ap.add_argument("--margin", type=int, default=2)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()

    params = ModelParams(omega=args.omega, omega0=args.omega0, g=args.g)
    numeric = run_numeric_suite(params, n_max=args.nmax, margin=args.margin)
    symbolic = run_symbolic_suite()
    cc = cross_check(numeric, symbolic)

    for r in numeric + symbolic:
        mark = "ok  " if r.passed else "FAIL"
        print(f"{mark} {r.engine:8s} {r.check_id:32s} {r.residual:.3e}")
    print(f"\nnumeric {sum(r.passed for r in numeric)}/{len(numeric)}, "
          f"symbolic {sum(r.passed for r in symbolic)}/{len(symbolic)}, "
          f"engines consistent: {cc.consistent}")
    for status in ("divergent", "truncation_artifact"):
        if cc.flagged(status):
            print(f"{status}: {', '.join(cc.flagged(status))}")

    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps(report_json(params, numeric + symbolic), indent=2) + "\n")
    return 0 if cc.consistent and all(r.passed for r in numeric + symbolic) else 1


if __name__ == "__main__":
    sys.exit(main())
