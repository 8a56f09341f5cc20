import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rabiops.hilbert import make_space
from rabiops.operators import (
    HAMILTONIAN_FORMS, DimensionError, Op, commutator, excitation_number, exp_parity_of, expm_hermitian,
    free_evolution, hamiltonian, identity, interior_residual, is_hermitian, ladder, parity, spin,
)
from rabiops.params import ModelParams

S = make_space(8)


def test_ladder_entries():
    a = ladder(S, "a").data
    # <n-1,e| a |n,e> = sqrt(n)
    for n in range(1, S.n_max + 1):
        assert a[2 * (n - 1), 2 * n] == pytest.approx(np.sqrt(n), abs=0)
        assert a[2 * (n - 1) + 1, 2 * n + 1] == pytest.approx(np.sqrt(n), abs=0)
    assert np.array_equal(ladder(S, "ad").data, a.conj().T)
    assert np.array_equal(ladder(S, "a_dagger").data, a.conj().T)


def test_spin_matrices_exact():
    sp, sm, sz = (spin(S, k).data[:2, :2] for k in ("sp", "sm", "sz"))
    assert np.array_equal(sp, [[0, 1], [0, 0]])
    assert np.array_equal(sm, [[0, 0], [1, 0]])
    assert np.array_equal(sz, [[0.5, 0], [0, -0.5]])


def test_canonical_commutator_interior():
    a, ad = ladder(S, "a"), ladder(S, "ad")
    c = commutator(a, ad) - identity(S)
    assert interior_residual(c, 1) < 1e-14
    # the boundary row is where truncation shows
    assert interior_residual(c, 0) > 1.0


def test_number_operators_diagonal_integers():
    n, nb = excitation_number(S, "N").data, excitation_number(S, "Nbar").data
    assert np.count_nonzero(n - np.diag(np.diag(n))) == 0
    lv = S.fock_levels()
    e = np.arange(S.dim) % 2 == 0
    # sqrt(n)*sqrt(n) is n only up to rounding
    assert np.allclose(np.diag(n).real, lv + e, rtol=0, atol=1e-14)
    assert np.allclose(np.diag(nb).real[lv < S.n_max], (lv + 1 + ~e)[lv < S.n_max], rtol=0, atol=1e-14)


@pytest.mark.parametrize("form", HAMILTONIAN_FORMS)
def test_hamiltonians_hermitian(form):
    assert is_hermitian(hamiltonian(S, ModelParams(omega=1.3, omega0=0.7, g=0.2, r=0.4), form))


def test_unknown_names():
    for fn, arg in ((ladder, "b"), (spin, "sx"), (excitation_number, "M")):
        with pytest.raises(ValueError):
            fn(S, arg)
    with pytest.raises(ValueError, match="unknown Hamiltonian form"):
        hamiltonian(S, ModelParams(), "jc_9z")


def test_space_mismatch():
    with pytest.raises(DimensionError):
        ladder(S, "a") @ ladder(make_space(4), "a")
    with pytest.raises(DimensionError):
        Op(S, "bad", np.zeros((3, 3)))


def test_scalar_multiplication_both_sides():
    a = ladder(S, "a")
    assert np.array_equal((np.float64(2.0) * a).data, (a * 2).data)
    assert np.array_equal((-a).data, -a.data)


@pytest.mark.parametrize("which", ["U0", "U0bar"])
def test_free_evolution_is_unitary_phase(which):
    u = free_evolution(S, ModelParams(), 0.77, which).data
    assert np.allclose(u.conj().T @ u, np.eye(S.dim), atol=1e-15)
    assert np.count_nonzero(u - np.diag(np.diag(u))) == 0


def test_parity_exact():
    pi = parity(S).data
    assert set(np.diag(pi).real) == {1.0, -1.0}
    assert np.array_equal(pi @ pi, np.eye(S.dim))
    assert np.array_equal(parity(S, 0).data, np.eye(S.dim))
    assert np.array_equal(parity(S, 3).data, pi)
    with pytest.raises(ValueError):
        parity(S, -1)
    with pytest.raises(ValueError):
        exp_parity_of(0.5 * excitation_number(S, "N"))


@settings(max_examples=25, deadline=None)
@given(theta=st.floats(-4, 4), seed=st.integers(0, 2**31))
def test_expm_matches_spectral_oracle(theta, seed):
    rng = np.random.default_rng(seed)
    m = rng.standard_normal((S.dim, S.dim)) + 1j * rng.standard_normal((S.dim, S.dim))
    x = Op(S, "X", m + m.conj().T)
    w, v = np.linalg.eigh(x.data)
    want = (v * np.exp(-1j * theta * w)) @ v.conj().T
    got = expm_hermitian(x, theta).data
    assert np.max(np.abs(got - want)) < 1e-11
