"""Eigenvalue spectra: Jacobi numerics and closed-form 2x2 block spectra.

The rotating Hamiltonian splits into the singlet |0,g> and doublets
{|n,e>, |n+1,g>}; the anti-rotating one into the singlet |0,e> and doublets
{|n+1,e>, |n,g>}. Diagonalizing each doublet gives the analytic oracles below.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .hilbert import make_space
from .linalg import jacobi_eigh
from .operators import Op, hamiltonian, parity
from .params import ModelParams, derive

DEGENERACY_TOL = 1e-9
CERTIFY_MASS = 1e-8
MODELS = ("jc", "ajc", "rabi")


@dataclass
class Spectrum:
    model: str
    params: ModelParams
    n_max: int
    eigenvalues: np.ndarray
    certified: np.ndarray
    eigenvectors: np.ndarray | None = None
    parity: np.ndarray | None = None

    @property
    def valid_count(self) -> int:
        return int(np.count_nonzero(self.certified))

    def certified_levels(self) -> np.ndarray:
        return self.eigenvalues[self.certified]


@dataclass
class SpectrumReport:
    numeric: Spectrum
    analytic: Spectrum | None = None
    max_deviation: float | None = None
    notes: list = field(default_factory=list)


def eigh(op: Op):
    return jacobi_eigh(op.data)


def _doublet(mean: float, half_gap: float, coupling: float) -> tuple[float, float]:
    root = math.hypot(half_gap, coupling)
    return mean - root, mean + root


def jc_spectrum_analytic(params: ModelParams, n_max: int) -> Spectrum:
    """Levels of the rotating Hamiltonian that fit in the truncated space.

    Doublet n: omega*(n+1) - omega/2 -+ 2g*sqrt(n + 1 + alpha^2/4).
    """
    d = derive(params)
    w, g = params.omega, params.g
    levels = [(-g * d.alpha - 0.5 * w, True)]
    for n in range(n_max):
        lam = math.sqrt(n + 1 + 0.25 * d.alpha**2)
        mean = w * (n + 1) - 0.5 * w
        ok = n + 1 <= n_max - 2
        levels += [(mean - 2 * g * lam, ok), (mean + 2 * g * lam, ok)]
    return _from_levels("jc", params, n_max, levels)


def ajc_spectrum_analytic(params: ModelParams, n_max: int) -> Spectrum:
    """Levels of the anti-rotating Hamiltonian that fit in the truncated space.

    Doublet n: omega*(n+1) + omega/2 -+ 2g*sqrt(n + 1 + alphabar^2/4).
    """
    d = derive(params)
    w, g = params.omega, params.g
    levels = [(g * d.alpha_bar + 0.5 * w, True)]
    for n in range(n_max):
        lam = math.sqrt(n + 1 + 0.25 * d.alpha_bar**2)
        mean = w * (n + 1) + 0.5 * w
        ok = n + 1 <= n_max - 2
        levels += [(mean - 2 * g * lam, ok), (mean + 2 * g * lam, ok)]
    return _from_levels("ajc", params, n_max, levels)


def _from_levels(model, params, n_max, levels) -> Spectrum:
    levels.sort(key=lambda x: x[0])
    return Spectrum(model, params, n_max,
                    np.array([e for e, _ in levels]), np.array([ok for _, ok in levels], dtype=bool))


def model_hamiltonian(model: str, params: ModelParams, n_max: int) -> Op:
    space = make_space(n_max)
    if model == "jc":
        return hamiltonian(space, params, "jc_1c")
    if model == "ajc":
        return hamiltonian(space, params, "ajc_1d")
    if model == "rabi":
        return hamiltonian(space, params, "rabi_r")
    raise ValueError(f"unknown model {model!r}; expected one of {MODELS}")


def parity_labels(space, evals: np.ndarray, evecs: np.ndarray):
    """<v|Pi|v> per level, rotating degenerate groups onto parity eigenvectors."""
    pi = parity(space).data
    vecs = evecs.copy()
    labels = np.empty(len(evals))
    start = 0
    while start < len(evals):
        stop = start + 1
        while stop < len(evals) and evals[stop] - evals[stop - 1] <= DEGENERACY_TOL:
            stop += 1
        block = vecs[:, start:stop]
        if stop - start == 1:
            labels[start] = np.real(block[:, 0].conj() @ pi @ block[:, 0])
        else:
            w, u = jacobi_eigh(block.conj().T @ pi @ block)
            vecs[:, start:stop] = block @ u
            labels[start:stop] = w
        start = stop
    return labels, vecs


def numeric_spectrum(model: str, params: ModelParams, n_max: int) -> Spectrum:
    h = model_hamiltonian(model, params, n_max)
    evals, evecs = eigh(h)
    labels, evecs = parity_labels(h.space, evals, evecs)
    top = h.space.fock_levels() > n_max - 2
    mass = np.sum(np.abs(evecs[top, :]) ** 2, axis=0)
    return Spectrum(model, params, n_max, evals, mass <= CERTIFY_MASS, evecs, labels)


def spectrum_report(model: str, params: ModelParams, n_max: int) -> SpectrumReport:
    """Numeric spectrum, compared with the analytic oracle where one exists."""
    num = numeric_spectrum(model, params, n_max)
    if model == "rabi":
        return SpectrumReport(num)
    oracle = (jc_spectrum_analytic if model == "jc" else ajc_spectrum_analytic)(params, n_max)
    got, want = num.certified_levels(), oracle.certified_levels()
    rep = SpectrumReport(num, oracle)
    if len(got) != len(want):
        rep.notes.append(f"certified counts differ: numeric {len(got)}, analytic {len(want)}")
        n = min(len(got), len(want))
        got, want = got[:n], want[:n]
    rep.max_deviation = float(np.max(np.abs(got - want))) if len(got) else 0.0
    return rep


def to_csv_rows(spec: Spectrum) -> list[list[str]]:
    rows = [["index", "eigenvalue", "parity", "certified"]]
    for i, e in enumerate(spec.eigenvalues):
        p = "" if spec.parity is None else str(int(round(spec.parity[i])))
        rows.append([str(i), repr(float(e)), p, "1" if spec.certified[i] else "0"])
    return rows
