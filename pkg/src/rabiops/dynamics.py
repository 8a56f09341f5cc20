"""Exact time evolution by spectral decomposition, with conservation traces."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .hilbert import Space, basis_index, make_space, parse_state
from .linalg import NotHermitianError, hermitian_defect, jacobi_eigh
from .operators import Op, parity, standard_operators
from .params import ModelParams

LEAKAGE_LIMIT = 1e-6
OBSERVABLES = ("N", "Nbar", "A", "Abar", "parity", "sz")


@dataclass
class StateVector:
    space: Space
    amplitudes: np.ndarray

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    @classmethod
    def basis(cls, space: Space, spec: str) -> "StateVector":
        psi = np.zeros(space.dim, dtype=complex)
        psi[basis_index(space, parse_state(spec))] = 1.0
        return cls(space, psi)

    @classmethod
    def from_amplitudes(cls, space: Space, amps, normalize: bool = True) -> "StateVector":
        psi = np.asarray(amps, dtype=complex)
        if psi.shape != (space.dim,):
            raise ValueError(f"expected {space.dim} amplitudes, got {psi.shape}")
        norm = np.linalg.norm(psi)
        if norm == 0:
            raise ValueError("zero state vector")
        return cls(space, psi / norm if normalize else psi)


@dataclass
class Trajectory:
    times: np.ndarray
    series: dict = field(default_factory=dict)
    leakage: np.ndarray | None = None
    drift: dict = field(default_factory=dict)
    unreliable: bool = False

    def to_csv_rows(self) -> list[list[str]]:
        names = list(self.series)
        rows = [["t", *names, "leakage"]]
        for k, t in enumerate(self.times):
            rows.append([_fmt(t), *(_fmt(self.series[n][k]) for n in names), _fmt(self.leakage[k])])
        return rows


def _fmt(x: float) -> str:
    return repr(float(x))


def time_grid(t_max: float, dt: float) -> np.ndarray:
    if dt <= 0:
        raise ValueError("dt must be positive")
    if t_max < 0:
        raise ValueError("t_max must be non-negative")
    steps = int(math.floor(t_max / dt + 1e-9))
    return dt * np.arange(steps + 1)


def evolve(h: Op, psi0: StateVector, t_max: float, dt: float) -> tuple[np.ndarray, np.ndarray]:
    """States exp(-i h t_k) psi0 on the grid t_k = k*dt; returns (times, states)."""
    if hermitian_defect(h.data) > 1e-10:
        raise NotHermitianError(f"{h.label} is not Hermitian")
    if abs(psi0.norm - 1.0) > 1e-12:
        raise ValueError(f"initial state is not normalized (norm {psi0.norm!r})")
    times = time_grid(t_max, dt)
    evals, evecs = jacobi_eigh(h.data)
    coeffs = evecs.conj().T @ psi0.amplitudes
    phases = np.exp(-1j * np.outer(times, evals))
    states = (phases * coeffs) @ evecs.T
    return times, states


def expectation(op: Op, psi) -> float:
    amps = psi.amplitudes if isinstance(psi, StateVector) else np.asarray(psi)
    z = np.vdot(amps, op.data @ amps)
    if abs(z.imag) > 1e-10:
        raise ValueError(f"<{op.label}> has imaginary part {z.imag:.3e}; operator not Hermitian?")
    return float(z.real)


def _expectations(op: Op, states: np.ndarray) -> np.ndarray:
    z = np.einsum("ki,ij,kj->k", states.conj(), op.data, states)
    if np.max(np.abs(z.imag)) > 1e-10:
        raise ValueError(f"<{op.label}> has a non-negligible imaginary part")
    return z.real


def _generator(tag: str, ops: dict, params: ModelParams) -> Op:
    if tag == "jc":
        return ops["H"]
    if tag == "ajc":
        return ops["Hbar"]
    if tag == "rabi":
        return ops["HR"]
    if tag.startswith("rabi(") and tag.endswith(")"):
        r = float(tag[5:-1])
        return 0.5 * ((1 + r) * ops["H"] + (1 - r) * ops["Hbar"])
    raise ValueError(f"unknown generator {tag!r}; expected jc, ajc, rabi or rabi(r)")


def conservation_trace(h_tag: str, observables, psi0, t_max: float, dt: float,
                       params: ModelParams, n_max: int) -> Trajectory:
    """Expectation series, drifts and truncation leakage along one evolution.

    ``psi0`` is a :class:`StateVector` or the "n,sigma" text form.
    """
    space = make_space(n_max)
    if isinstance(psi0, str):
        psi0 = StateVector.basis(space, psi0)
    occupied = space.fock_levels()[np.abs(psi0.amplitudes) > 0]
    if occupied.size and occupied.max() > n_max / 2:
        raise ValueError("initial state must live on Fock levels <= n_max/2")
    ops = standard_operators(space, params)
    h = _generator(h_tag, ops, params)
    times, states = evolve(h, psi0, t_max, dt)

    traj = Trajectory(times)
    for name in observables:
        if name == "energy":
            op = h
        elif name == "parity":
            op = parity(space)
        elif name in OBSERVABLES:
            op = ops[name]
        else:
            raise ValueError(f"unknown observable {name!r}; expected one of {OBSERVABLES + ('energy',)}")
        series = _expectations(op, states)
        traj.series[name] = series
        traj.drift[name] = float(np.max(np.abs(series - series[0])))
    top = space.fock_levels() > n_max - 2
    traj.leakage = np.sum(np.abs(states[:, top]) ** 2, axis=1)
    traj.unreliable = bool(np.max(traj.leakage) > LEAKAGE_LIMIT)
    return traj
