"""Rotating and anti-rotating components of the quantum Rabi model.

Numeric operators on a truncated Fock x spin space, an exact normal-ordering
engine, identity suites that run through both, spectra, dynamics and coupling
sweeps.
"""
from .hilbert import Space, make_space
from .operators import Op, hamiltonian, standard_operators
from .params import DerivedParams, ModelParams, ParameterError, derive

__all__ = [
    "DerivedParams", "ModelParams", "Op", "ParameterError", "Space",
    "derive", "hamiltonian", "make_space", "standard_operators",
]
