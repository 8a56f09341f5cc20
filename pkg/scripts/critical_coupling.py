"""Sweep g, locate where exp(i pi (beta^2 - 1)) returns to 1, and refine by bisection.

    python3 scripts/critical_coupling.py --g-from 0.3 --g-to 0.7 --steps 81
"""
import argparse
import csv
import sys
from pathlib import Path

from rabiops.params import ModelParams
from rabiops.sweep import refine_critical, sweep_g, to_csv_rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--omega", type=float, default=1.0)
    ap.add_argument("--omega0", type=float, default=1.0)
    ap.add_argument("--r", type=float, default=0.0)
    ap.add_argument("--g-from", type=float, default=0.3)
    ap.add_argument("--g-to", type=float, default=0.7)
    ap.add_argument("--steps", type=int, default=81)
    ap.add_argument("--gap", action="store_true", help="also compute the lowest gap of the mixed model")
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()

    base = ModelParams(omega=args.omega, omega0=args.omega0, r=args.r)
    res = sweep_g(base, args.g_from, args.g_to, args.steps, r=args.r, gap=args.gap)
    best = res.best
    print(f"grid minimum: g={best.g:.6f}  |phase-1|={best.phase_distance:.3e}")
    print(f"max relation residual over grid: {max(r.relation_residual for r in res.rows):.3e}")
    for c in res.crossings:
        tag = "principal" if c.principal else f"beta^2 = {2 * c.k + 1}"
        print(f"crossing in [{c.g_lo:.6f}, {c.g_hi:.6f}]  ({tag})")
        est = refine_critical(base, (c.g_lo, c.g_hi)) if c.principal else None
        if est:
            print(f"  bisection g_c={est.g_c!r}  closed form {est.analytic!r}  rel err {est.rel_error:.1e}")

    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        with args.out.open("w", newline="") as fh:
            csv.writer(fh, lineterminator="\n").writerows(to_csv_rows(res))
    return 0


if __name__ == "__main__":
    sys.exit(main())
