"""Dense operators on the truncated Fock x spin space.

Every builder returns an :class:`Op`; the algebra helpers at the bottom are the
numerical counterparts of products, brackets and norms.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import Space, interior_mask
from .linalg import NotHermitianError, hermitian_defect, jacobi_eigh
from .params import ModelParams, derive

# spin basis order (e, g)
_SPIN = {
    "sz": np.array([[0.5, 0.0], [0.0, -0.5]], dtype=complex),
    "sp": np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex),
    "sm": np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex),
    "I": np.eye(2, dtype=complex),
}

HAMILTONIAN_FORMS = ("jc_1c", "ajc_1d", "jc_2d", "ajc_2d", "jc_3f", "ajc_3f", "rabi_1a", "rabi_r")


class DimensionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Op:
    space: Space
    label: str
    data: np.ndarray

    # make numpy scalars defer to Op.__rmul__
    __array_ufunc__ = None

    def __post_init__(self):
        if self.data.shape != (self.space.dim, self.space.dim):
            raise DimensionError(
                f"{self.label}: shape {self.data.shape} does not match dim {self.space.dim}"
            )

    def _check(self, other: "Op"):
        if self.space != other.space:
            raise DimensionError(f"{self.label} and {other.label} live on different spaces")

    def __matmul__(self, other: "Op") -> "Op":
        return mul(self, other)

    def __add__(self, other: "Op") -> "Op":
        return add(self, other)

    def __sub__(self, other: "Op") -> "Op":
        self._check(other)
        return Op(self.space, f"({self.label}-{other.label})", self.data - other.data)

    def __neg__(self) -> "Op":
        return Op(self.space, f"-{self.label}", -self.data)

    def __mul__(self, z) -> "Op":
        return scale(self, z)

    __rmul__ = __mul__

    @property
    def dag(self) -> "Op":
        return adjoint(self)

    def relabel(self, label: str) -> "Op":
        return Op(self.space, label, self.data)


def identity(space: Space) -> Op:
    return Op(space, "I", np.eye(space.dim, dtype=complex))


def _embed(space: Space, fock: np.ndarray, spin: str, label: str) -> Op:
    return Op(space, label, np.kron(fock, _SPIN[spin]))


def ladder(space: Space, which: str) -> Op:
    """Annihilation ``"a"`` or creation ``"a_dagger"`` / ``"ad"`` operator."""
    a = np.diag(np.sqrt(np.arange(1, space.n_max + 1, dtype=float)), k=1).astype(complex)
    if which == "a":
        return _embed(space, a, "I", "a")
    if which in ("a_dagger", "ad"):
        return _embed(space, a.conj().T, "I", "ad")
    raise ValueError(f"unknown ladder operator {which!r}")


def spin(space: Space, which: str) -> Op:
    if which not in ("sz", "sp", "sm"):
        raise ValueError(f"unknown spin operator {which!r}")
    return _embed(space, np.eye(space.n_max + 1, dtype=complex), which, which)


def excitation_number(space: Space, which: str) -> Op:
    a, ad = ladder(space, "a"), ladder(space, "ad")
    sp, sm = spin(space, "sp"), spin(space, "sm")
    if which == "N":
        return (ad @ a + sp @ sm).relabel("N")
    if which == "Nbar":
        return (a @ ad + sm @ sp).relabel("Nbar")
    raise ValueError(f"unknown excitation number {which!r}")


def transition(space: Space, derived, which: str) -> Op:
    a, ad = ladder(space, "a"), ladder(space, "ad")
    sz, sp, sm = spin(space, "sz"), spin(space, "sp"), spin(space, "sm")
    if which == "A":
        return (derived.alpha * sz + a @ sp + ad @ sm).relabel("A")
    if which == "Abar":
        return (derived.alpha_bar * sz + a @ sm + ad @ sp).relabel("Abar")
    raise ValueError(f"unknown transition operator {which!r}")


def hamiltonian(space: Space, params: ModelParams, form: str) -> Op:
    """Build one of the Hamiltonian forms literally as written.

    ``jc_*`` are the rotating component, ``ajc_*`` the anti-rotating one,
    ``rabi_1a`` the full model and ``rabi_r`` the chirality-weighted mix.
    """
    d = derive(params)
    w, w0, g = params.omega, params.omega0, params.g
    a, ad = ladder(space, "a"), ladder(space, "ad")
    sz, sp, sm = spin(space, "sz"), spin(space, "sp"), spin(space, "sm")
    one = identity(space)

    if form == "jc_1c":
        h = w * (ad @ a) + w0 * sz + 2 * g * (a @ sp + ad @ sm)
    elif form == "ajc_1d":
        h = w * (a @ ad) + w0 * sz + 2 * g * (a @ sm + ad @ sp)
    elif form == "jc_2d":
        n = excitation_number(space, "N")
        h = w * n + 2 * g * (d.alpha * sz + a @ sp + ad @ sm) - 0.5 * w * one
    elif form == "ajc_2d":
        nb = excitation_number(space, "Nbar")
        h = w * nb + 2 * g * (d.alpha_bar * sz + a @ sm + ad @ sp) - 0.5 * w * one
    elif form == "jc_3f":
        A = transition(space, d, "A")
        h = w * (A @ A) + 2 * g * A - (0.25 * w * d.alpha**2 + 0.5 * w) * one
    elif form == "ajc_3f":
        Ab = transition(space, d, "Abar")
        h = w * (Ab @ Ab) + 2 * g * Ab - (0.25 * w * d.alpha_bar**2 - 0.5 * w) * one
    elif form == "rabi_1a":
        h = 0.5 * w * (ad @ a + a @ ad) + w0 * sz + g * ((a + ad) @ (sp + sm))
    elif form == "rabi_r":
        r = params.r
        h = 0.5 * ((1 + r) * hamiltonian(space, params, "jc_1c")
                   + (1 - r) * hamiltonian(space, params, "ajc_1d"))
    else:
        raise ValueError(f"unknown Hamiltonian form {form!r}; expected one of {HAMILTONIAN_FORMS}")
    return h.relabel(form)


def _diagonal_phases(space: Space, diag: np.ndarray, theta: float, label: str) -> Op:
    return Op(space, label, np.diag(np.exp(-1j * theta * diag)))


def free_evolution(space: Space, params: ModelParams, t: float, which: str = "U0") -> Op:
    """exp(-i omega t N) for ``U0`` or exp(-i omega t Nbar) for ``U0bar``.

    Both generators are diagonal in the product basis, so the exponential is
    an exact phase matrix.
    """
    if which == "U0":
        gen = excitation_number(space, "N")
    elif which == "U0bar":
        gen = excitation_number(space, "Nbar")
    else:
        raise ValueError(f"unknown free evolution {which!r}")
    return _diagonal_phases(space, np.real(np.diag(gen.data)), params.omega * t, f"{which}({t:g})")


def exp_parity_of(gen: Op) -> Op:
    """exp(-i pi G) for a diagonal generator with integer spectrum, entries exactly +-1."""
    diag = np.real(np.diag(gen.data))
    k = np.rint(diag)
    if np.max(np.abs(diag - k)) > 1e-12 or np.count_nonzero(gen.data - np.diag(np.diag(gen.data))):
        raise ValueError(f"{gen.label} is not diagonal with integer entries")
    signs = np.where(k.astype(np.int64) % 2 == 0, 1.0, -1.0)
    return Op(gen.space, f"exp(-i*pi*{gen.label})", np.diag(signs.astype(complex)))


def parity(space: Space, power: int = 1) -> Op:
    """Pi^power with Pi = exp(-i pi N)."""
    if power < 0:
        raise ValueError("parity power must be >= 0")
    pi = exp_parity_of(excitation_number(space, "N"))
    diag = np.real(np.diag(pi.data)) ** power
    return Op(space, "Pi" if power == 1 else f"Pi^{power}", np.diag(diag.astype(complex)))


# -- matrix algebra ---------------------------------------------------------

def mul(x: Op, y: Op) -> Op:
    x._check(y)
    return Op(x.space, f"{x.label}*{y.label}", x.data @ y.data)


def add(x: Op, y: Op) -> Op:
    x._check(y)
    return Op(x.space, f"({x.label}+{y.label})", x.data + y.data)


def scale(x: Op, z) -> Op:
    return Op(x.space, f"{z}*{x.label}", complex(z) * x.data)


def adjoint(x: Op) -> Op:
    return Op(x.space, f"{x.label}^+", x.data.conj().T)


def commutator(x: Op, y: Op) -> Op:
    x._check(y)
    return Op(x.space, f"[{x.label},{y.label}]", x.data @ y.data - y.data @ x.data)


def frobenius_norm(x) -> float:
    return float(np.linalg.norm(x.data if isinstance(x, Op) else x))


def max_abs(x) -> float:
    m = x.data if isinstance(x, Op) else x
    return float(np.max(np.abs(m))) if m.size else 0.0


def is_hermitian(x: Op, rtol: float = 1e-13) -> bool:
    return hermitian_defect(x.data) <= rtol


def expm_hermitian(x: Op, theta: float) -> Op:
    """exp(-i theta X) for Hermitian X, via eigendecomposition."""
    if hermitian_defect(x.data) > 1e-10:
        raise NotHermitianError(f"{x.label} is not Hermitian")
    evals, vecs = jacobi_eigh(x.data)
    data = (vecs * np.exp(-1j * theta * evals)) @ vecs.conj().T
    return Op(x.space, f"exp(-i*{theta:g}*{x.label})", data)


def interior_residual(x, margin: int, space: Space | None = None) -> float:
    """Frobenius norm of P X P with P the margin interior projector."""
    if isinstance(x, Op):
        space, m = x.space, x.data
    else:
        m = np.asarray(x)
    keep = interior_mask(space, margin)
    return float(np.linalg.norm(m[np.ix_(keep, keep)]))


def standard_operators(space: Space, params: ModelParams) -> dict[str, Op]:
    """Every named operator at one parameter point, keyed by short label."""
    d = derive(params)
    ops = {
        "I": identity(space),
        "a": ladder(space, "a"),
        "ad": ladder(space, "ad"),
        "sz": spin(space, "sz"),
        "sp": spin(space, "sp"),
        "sm": spin(space, "sm"),
        "N": excitation_number(space, "N"),
        "Nbar": excitation_number(space, "Nbar"),
        "A": transition(space, d, "A"),
        "Abar": transition(space, d, "Abar"),
        "Pi": parity(space),
    }
    for tag, form in (("H", "jc_1c"), ("Hbar", "ajc_1d"), ("H_2d", "jc_2d"), ("Hbar_2d", "ajc_2d"),
                      ("H_3f", "jc_3f"), ("Hbar_3f", "ajc_3f"), ("HR_1a", "rabi_1a"), ("HR", "rabi_r")):
        ops[tag] = hamiltonian(space, params, form)
    return ops
