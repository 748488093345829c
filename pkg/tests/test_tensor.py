import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ghz_battery.channels import kraus_operators
from ghz_battery.model import ghz_like_state, ghz_state
from ghz_battery.tensor import (
    I2, SIGMA_X, SIGMA_Z, clamp_probabilities, dagger, hermitian_eigenvalues_ascending,
    hermiticity_defect, kron, partial_trace, symmetrize,
)

from _support import jacobi_eigenvalues, random_density, random_hermitian, random_local_unitary


def test_kron_identity():
    assert np.array_equal(kron(I2, I2), np.eye(4))


def test_kron_diagonal_case():
    assert np.array_equal(kron(SIGMA_Z, I2), np.diag([1, 1, -1, -1]))


def test_kron_xx_squares_to_identity():
    xx = kron(SIGMA_X, SIGMA_X)
    assert np.array_equal(xx @ xx, np.eye(4))


def test_kron_three_factors_shape():
    assert kron(I2, I2, I2).shape == (8, 8)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_kron_associative_integer_entries(seed):
    rng = np.random.default_rng(seed)
    a, b, c = (rng.integers(-5, 6, size=(2, 3)) for _ in range(3))
    assert np.array_equal(kron(kron(a, b), c), kron(a, kron(b, c)))


def test_dagger_real_diagonal_fixed():
    d = np.diag([1.0, -2.0, 3.0])
    assert np.array_equal(dagger(d), d)


def test_dagger_of_adc_e1():
    e1 = kraus_operators("adc", 0.36)[1]
    expected = np.array([[0, 0], [0.6, 0]])
    assert np.allclose(dagger(e1), expected, atol=0, rtol=0)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_dagger_involution(seed):
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert np.array_equal(dagger(dagger(m)), m)


def test_partial_trace_ghz_is_maximally_mixed():
    for keep in "ABC":
        assert np.allclose(partial_trace(ghz_state(), keep), I2 / 2, atol=1e-15)


def test_partial_trace_product_basis_state():
    rho = np.zeros((8, 8))
    rho[0, 0] = 1
    assert np.array_equal(partial_trace(rho, "B"), np.diag([1.0, 0.0]))


def test_partial_trace_ghz_like():
    a = 0.6
    for keep in (0, 1, 2):
        assert np.allclose(partial_trace(ghz_like_state(a), keep), np.diag([a * a, 1 - a * a]))


def test_partial_trace_picks_the_right_factor():
    rng = np.random.default_rng(7)
    ra, rb, rc = (random_density(rng, 2) for _ in range(3))
    rho = kron(ra, rb, rc)
    assert np.allclose(partial_trace(rho, "A"), ra)
    assert np.allclose(partial_trace(rho, "B"), rb)
    assert np.allclose(partial_trace(rho, "C"), rc)


def test_partial_trace_rejects_wrong_dimension():
    with pytest.raises(ValueError):
        partial_trace(np.eye(4) / 4, "A")
    with pytest.raises(ValueError):
        partial_trace(np.eye(8) / 8, "D")


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from("ABC"))
def test_partial_trace_unit_trace_and_hermitian(seed, keep):
    rho = random_density(np.random.default_rng(seed))
    red = partial_trace(rho, keep)
    assert abs(np.trace(red) - 1) <= 1e-12
    assert hermiticity_defect(red) <= 1e-12


def test_eigenvalues_diagonal():
    assert np.allclose(hermitian_eigenvalues_ascending(np.diag([3.0, 1.0, 2.0])), [1, 2, 3])


def test_eigenvalues_pure_ghz_like_block():
    c2 = np.sqrt(3) / 4
    vals = hermitian_eigenvalues_ascending(np.array([[0.25, c2], [c2, 0.75]]))
    assert np.allclose(vals, [0.0, 1.0], atol=1e-15)


def test_eigenvalues_damped_ghz_at_half():
    p = 0.5
    rho = np.zeros((8, 8))
    rho[0, 0] = 0.5
    rho[0, 7] = rho[7, 0] = np.sqrt(1 - p) / 2
    rho[3, 3] = p / 2
    rho[7, 7] = (1 - p) / 2
    vals = hermitian_eigenvalues_ascending(rho)
    assert np.allclose(vals, [0, 0, 0, 0, 0, 0, 0.25, 0.75], atol=1e-15)


def test_eigenvalues_reject_non_square():
    with pytest.raises(ValueError):
        hermitian_eigenvalues_ascending(np.zeros((2, 3)))


def test_eigenvalues_reject_non_hermitian():
    with pytest.raises(ValueError):
        hermitian_eigenvalues_ascending(np.array([[0, 1], [0, 0]]), tol=1e-10)


def test_eigenvalues_accept_small_asymmetry():
    m = np.array([[1.0, 1e-13], [0.0, 2.0]])
    assert np.allclose(hermitian_eigenvalues_ascending(m), [1, 2])


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 8))
def test_eigenvalue_sum_equals_trace(seed, dim):
    m = random_hermitian(np.random.default_rng(seed), dim)
    vals = hermitian_eigenvalues_ascending(m)
    assert np.all(np.diff(vals) >= 0)
    assert abs(vals.sum() - np.trace(m).real) <= 1e-10


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 8))
def test_eigenvalues_match_independent_jacobi(seed, dim):
    m = random_hermitian(np.random.default_rng(seed), dim)
    assert np.allclose(hermitian_eigenvalues_ascending(m), jacobi_eigenvalues(m), atol=1e-10)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_eigenvalues_invariant_under_local_unitaries(seed):
    rng = np.random.default_rng(seed)
    m = random_hermitian(rng, 8)
    u = random_local_unitary(rng)
    rotated = u @ m @ u.conj().T
    assert np.allclose(hermitian_eigenvalues_ascending(m),
                       hermitian_eigenvalues_ascending(rotated, tol=1e-9), atol=1e-10)


def test_symmetrize_is_hermitian_part():
    m = np.array([[1, 2j], [0, 3]])
    s = symmetrize(m)
    assert hermiticity_defect(s) == 0
    assert np.allclose(s, [[1, 1j], [-1j, 3]])


def test_clamp_probabilities_only_touches_tiny_negatives():
    out = clamp_probabilities([-1e-13, -1e-6, 0.5])
    assert out[0] == 0.0
    assert out[1] == -1e-6
    assert out[2] == 0.5
