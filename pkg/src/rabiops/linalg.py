"""Cyclic Jacobi eigensolver for complex Hermitian matrices."""
from __future__ import annotations

import math

import numpy as np


class NotHermitianError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    def __init__(self, off_norm: float, sweeps: int):
        super().__init__(f"Jacobi did not converge after {sweeps} sweeps (off-norm {off_norm:.3e})")
        self.off_norm = off_norm
        self.sweeps = sweeps


def hermitian_defect(m: np.ndarray) -> float:
    """Relative Frobenius distance of ``m`` from its adjoint."""
    norm = np.linalg.norm(m)
    if norm == 0.0:
        return 0.0
    return float(np.linalg.norm(m - m.conj().T) / norm)


def _off_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def jacobi_eigh(m, *, rtol: float = 1e-13, max_sweeps: int = 100, herm_tol: float = 1e-10):
    """Eigen-decompose a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues ascending and the
    eigenvectors as orthonormal columns.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if hermitian_defect(a) > herm_tol:
        raise NotHermitianError(f"matrix is not Hermitian (defect {hermitian_defect(a):.3e})")
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = float(np.linalg.norm(a))
    target = rtol * scale
    # pivots below this are treated as already annihilated
    tiny = 1e-300 + 1e-18 * target

    sweeps = 0
    off = _off_norm(a)
    while off > target:
        if sweeps >= max_sweeps:
            raise ConvergenceError(off / scale, sweeps)
        sweeps += 1
        for p in range(n - 1):
            row = a[p]
            for q in np.flatnonzero(np.abs(row[p + 1:]) > tiny) + p + 1:
                apq = a[p, q]
                b = abs(apq)
                if b <= tiny:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * b)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                phase = apq / b
                # G = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                g00, g01 = c, s
                g10, g11 = -s * phase.conjugate(), c * phase.conjugate()

                cp = a[:, p].copy()
                cq = a[:, q]
                a[:, p] = cp * g00 + cq * g10
                a[:, q] = cp * g01 + cq * g11
                rp = a[p, :].copy()
                rq = a[q, :]
                a[p, :] = rp * g00 + rq * g10.conjugate()
                a[q, :] = rp * g01 + rq * g11.conjugate()
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * b
                a[q, q] = aqq + t * b

                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = vp * g00 + vq * g10
                v[:, q] = vp * g01 + vq * g11
        off = _off_norm(a)

    evals = np.real(np.diag(a))
    order = np.argsort(evals, kind="stable")
    return evals[order], v[:, order]
