"""Battery capacity and ergotropy of a state against a Hamiltonian."""
from dataclasses import dataclass

import numpy as np

from .tensor import clamp_probabilities, hermitian_eigenvalues_ascending

FORM_AGREEMENT_TOL = 1e-12


@dataclass(frozen=True)
class CapacityResult:
    capacity: float
    state_spectrum: np.ndarray
    energy_levels: np.ndarray

    def __float__(self):
        return self.capacity


def _check_dims(rho, hamiltonian):
    rho = np.asarray(rho)
    d = hamiltonian.dim
    if rho.shape[-2:] != (d, d):
        raise ValueError(
            f"state of shape {rho.shape[-2:]} does not match a {d}-level Hamiltonian"
        )
    return rho


def capacity_from_spectra(state_values, energy_levels) -> np.ndarray:
    """``sum_i eps_i (lam_i - lam_{d-1-i})`` for ascending spectra.

    Broadcasts over leading axes of ``state_values``.
    """
    lam = np.asarray(state_values, dtype=float)
    eps = np.asarray(energy_levels, dtype=float)
    return np.sum(eps * (lam - lam[..., ::-1]), axis=-1)


def capacity_from_spectra_dual(state_values, energy_levels) -> np.ndarray:
    """The summed-by-parts form ``sum_i lam_i (eps_i - eps_{d-1-i})``."""
    lam = np.asarray(state_values, dtype=float)
    eps = np.asarray(energy_levels, dtype=float)
    return np.sum(lam * (eps - eps[::-1]), axis=-1)


def battery_capacity(rho, hamiltonian) -> CapacityResult:
    """Capacity of ``rho`` with respect to ``hamiltonian``.

    ``hamiltonian`` is a :class:`~ghz_battery.model.TripartiteHamiltonian` or
    :class:`~ghz_battery.model.QubitHamiltonian`. Both algebraic forms are
    evaluated; a disagreement beyond 1e-12 means the spectra were not sorted
    consistently and raises ``ArithmeticError``.
    """
    rho = _check_dims(rho, hamiltonian)
    lam = clamp_probabilities(hermitian_eigenvalues_ascending(rho))
    eps = np.asarray(hamiltonian.levels, dtype=float)
    value = float(capacity_from_spectra(lam, eps))
    dual = float(capacity_from_spectra_dual(lam, eps))
    if abs(value - dual) > FORM_AGREEMENT_TOL:
        raise ArithmeticError(f"capacity forms disagree: {value!r} vs {dual!r}")
    return CapacityResult(value, lam, eps)


def capacity_many(rhos, hamiltonian) -> np.ndarray:
    """Capacities for a stack of states ``(..., d, d)``."""
    rhos = _check_dims(rhos, hamiltonian)
    lam = clamp_probabilities(hermitian_eigenvalues_ascending(rhos))
    eps = np.asarray(hamiltonian.levels, dtype=float)
    value = capacity_from_spectra(lam, eps)
    dual = capacity_from_spectra_dual(lam, eps)
    worst = float(np.max(np.abs(value - dual), initial=0.0))
    if worst > FORM_AGREEMENT_TOL:
        raise ArithmeticError(f"capacity forms disagree by {worst:.3e}")
    return value


def _eigenbasis(hamiltonian):
    energies, vectors = np.linalg.eigh(np.asarray(hamiltonian.matrix))
    return energies, vectors


def passive_state(rho, hamiltonian) -> np.ndarray:
    """Passive state with the spectrum of ``rho``.

    Populations sorted in descending order are placed on the energy
    eigenstates sorted in ascending order.
    """
    rho = _check_dims(rho, hamiltonian)
    lam = clamp_probabilities(hermitian_eigenvalues_ascending(rho))
    _, vectors = _eigenbasis(hamiltonian)
    return (vectors * lam[::-1]) @ vectors.conj().T


def ergotropy(rho, hamiltonian) -> float:
    """Maximum energy extractable from ``rho`` by a unitary.

    ``Tr(rho H) - Tr(passive H)``.
    """
    rho = _check_dims(rho, hamiltonian)
    h = np.asarray(hamiltonian.matrix)
    energies, _ = _eigenbasis(hamiltonian)
    lam = clamp_probabilities(hermitian_eigenvalues_ascending(rho))
    mean_energy = float(np.real(np.trace(rho @ h)))
    passive_energy = float(np.dot(lam[::-1], energies))
    return max(mean_energy - passive_energy, 0.0)
