"""Truncated Fock x spin-1/2 Hilbert space.

Basis state |n, sigma> sits at index 2n + (0 if sigma == "e" else 1), so the
spin label runs fastest.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SIGMAS = ("e", "g")


@dataclass(frozen=True)
class Space:
    n_max: int

    @property
    def dim(self) -> int:
        return 2 * (self.n_max + 1)

    def fock_levels(self) -> np.ndarray:
        """Fock occupation of every basis index."""
        return np.arange(self.dim) // 2

    def labels(self) -> list[str]:
        return [str(basis_state(self, i)) for i in range(self.dim)]


@dataclass(frozen=True)
class BasisState:
    n: int
    sigma: str

    def __str__(self) -> str:
        return f"{self.n},{self.sigma}"


def make_space(n_max: int) -> Space:
    if isinstance(n_max, bool) or not isinstance(n_max, (int, np.integer)):
        raise TypeError("n_max must be an integer")
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    return Space(int(n_max))


def basis_index(space: Space, state: BasisState) -> int:
    if state.sigma not in SIGMAS:
        raise ValueError(f"unknown atomic level {state.sigma!r}")
    if not 0 <= state.n <= space.n_max:
        raise ValueError(f"Fock level {state.n} outside 0..{space.n_max}")
    return 2 * state.n + SIGMAS.index(state.sigma)


def basis_state(space: Space, index: int) -> BasisState:
    if not 0 <= index < space.dim:
        raise ValueError(f"index {index} outside 0..{space.dim - 1}")
    return BasisState(index // 2, SIGMAS[index % 2])


def parse_state(text: str) -> BasisState:
    """Parse the "n,sigma" text form, e.g. ``"3,e"``."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2 or not parts[0].isdigit() or parts[1] not in SIGMAS:
        raise ValueError(f"bad basis state {text!r}; expected 'n,e' or 'n,g'")
    return BasisState(int(parts[0]), parts[1])


def interior_mask(space: Space, margin: int) -> np.ndarray:
    if not 0 <= margin <= space.n_max:
        raise ValueError(f"margin {margin} outside 0..{space.n_max}")
    return space.fock_levels() <= space.n_max - margin


def interior_projector(space: Space, margin: int):
    from .operators import Op

    return Op(space, f"P{margin}", np.diag(interior_mask(space, margin).astype(complex)))
