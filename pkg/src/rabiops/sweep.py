"""Coupling sweeps of the global phase factor exp(i pi (beta^2 - 1))."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .hilbert import make_space
from .operators import expm_hermitian, interior_residual, transition
from .params import ModelParams, critical_coupling, derive
from .spectra import numeric_spectrum


@dataclass
class SweepRow:
    g: float
    beta_sq: float
    phase_factor: complex
    phase_distance: float
    relation_residual: float
    gap: float | None = None


@dataclass
class Crossing:
    """Adjacent grid points between which beta^2 - 1 passes the even integer 2k."""
    g_lo: float
    g_hi: float
    k: int

    @property
    def principal(self) -> bool:
        return self.k == 0


@dataclass
class SweepResult:
    rows: list
    argmin: int
    crossings: list = field(default_factory=list)

    @property
    def best(self) -> SweepRow:
        return self.rows[self.argmin]


@dataclass
class CriticalEstimate:
    g_c: float
    analytic: float
    rel_error: float
    iterations: int


def phase_factor(beta_sq: float) -> complex:
    return cmath.exp(1j * math.pi * (beta_sq - 1.0))


def relation_residual(params: ModelParams, n_max: int = 20, margin: int = 2) -> float:
    """Interior residual of exp(-i pi A^2) - exp(-i pi Abar^2) exp(i pi (beta^2 - 1))."""
    space = make_space(n_max)
    d = derive(params)
    A = transition(space, d, "A")
    Ab = transition(space, d, "Abar")
    lhs = expm_hermitian(A @ A, math.pi)
    rhs = expm_hermitian(Ab @ Ab, math.pi)
    return interior_residual(lhs.data - phase_factor(d.beta_sq) * rhs.data, margin, space)


def _gap(params: ModelParams, n_max: int) -> float:
    levels = numeric_spectrum("rabi", params, n_max).certified_levels()
    return float(levels[1] - levels[0])


def sweep_g(base: ModelParams, g_from: float, g_to: float, steps: int, n_max: int = 20,
            margin: int = 2, r: float | None = None, gap: bool = False) -> SweepResult:
    if not 0 < g_from < g_to:
        raise ValueError("need 0 < g_from < g_to")
    if steps < 2:
        raise ValueError("steps must be >= 2")
    if r is not None:
        base = base.replace(r=r)
    rows = []
    for k in range(steps):
        g = g_from + (g_to - g_from) * k / (steps - 1)
        p = base.replace(g=g)
        d = derive(p)
        z = phase_factor(d.beta_sq)
        rows.append(SweepRow(
            g=g, beta_sq=d.beta_sq, phase_factor=z, phase_distance=abs(z - 1.0),
            relation_residual=relation_residual(p, n_max, margin),
            gap=_gap(p, n_max) if gap else None,
        ))
    argmin = int(np.argmin([row.phase_distance for row in rows]))
    return SweepResult(rows, argmin, _crossings(rows))


def _crossings(rows) -> list[Crossing]:
    out = []
    for lo, hi in zip(rows, rows[1:]):
        x0, x1 = lo.beta_sq - 1.0, hi.beta_sq - 1.0
        # even integers 2k with min < 2k <= max, so a grid hit is counted once
        a, b = sorted((x0, x1))
        for k in range(math.floor(a / 2) + 1, math.floor(b / 2) + 1):
            out.append(Crossing(lo.g, hi.g, k))
    return out


def refine_critical(params: ModelParams, bracket: tuple[float, float], rtol: float = 1e-12) -> CriticalEstimate:
    """Bisect beta^2(g) - 1 = 0 inside ``bracket`` and compare with sqrt(omega0*omega)/2."""
    lo, hi = sorted(bracket)
    if lo <= 0:
        raise ValueError("bracket must be positive")

    def f(g):
        return params.omega0 * params.omega / (4 * g * g) - 1.0

    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0:
        hi = lo
    elif f_hi == 0:
        lo = hi
    elif (f_lo > 0) == (f_hi > 0):
        raise ValueError("no sign change of beta^2 - 1 in bracket")
    it = 0
    while hi - lo > 0.25 * rtol * hi:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        f_mid = f(mid)
        if f_mid == 0:
            lo = hi = mid
            break
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        it += 1
    est = 0.5 * (lo + hi)
    exact = critical_coupling(params.omega, params.omega0)
    return CriticalEstimate(est, exact, abs(est - exact) / exact, it)


def to_csv_rows(result: SweepResult) -> list[list[str]]:
    with_gap = any(row.gap is not None for row in result.rows)
    header = ["g", "beta_sq", "phase_re", "phase_im", "phase_distance", "relation_residual"]
    rows = [header + (["gap"] if with_gap else [])]
    for row in result.rows:
        vals = [row.g, row.beta_sq, row.phase_factor.real, row.phase_factor.imag,
                row.phase_distance, row.relation_residual]
        if with_gap:
            vals.append(row.gap)
        rows.append([repr(float(v)) for v in vals])
    return rows
