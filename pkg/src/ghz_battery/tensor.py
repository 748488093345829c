"""Small dense complex linear algebra used throughout the package.

Matrices are plain ``numpy`` arrays. Multi-qubit operators use big-endian
qubit ordering: qubit A is the most significant bit of the basis index, so
``|abc>`` sits at index ``4a + 2b + c``.
"""
from functools import reduce

import numpy as np

HERMITIAN_TOL = 1e-12

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

SUBSYSTEMS = ("A", "B", "C")


def kron(a, b, *rest) -> np.ndarray:
    """Kronecker product of two or more matrices, left to right."""
    return reduce(np.kron, (b, *rest), np.asarray(a))


def dagger(m) -> np.ndarray:
    """Conjugate transpose over the last two axes."""
    return np.conj(np.swapaxes(np.asarray(m), -1, -2))


def hermiticity_defect(m) -> float:
    """Largest entrywise deviation ``max |M - M^dagger|``."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - dagger(m)), initial=0.0))


def symmetrize(m) -> np.ndarray:
    """Hermitian part ``(M + M^dagger) / 2``."""
    m = np.asarray(m)
    return 0.5 * (m + dagger(m))


def _subsystem_index(keep) -> int:
    if isinstance(keep, str):
        try:
            return SUBSYSTEMS.index(keep.upper())
        except ValueError:
            raise ValueError(f"unknown subsystem {keep!r}; expected one of A, B, C") from None
    if keep not in (0, 1, 2):
        raise ValueError(f"subsystem index must be 0, 1 or 2, got {keep!r}")
    return int(keep)


def partial_trace(rho, keep) -> np.ndarray:
    """Reduce a three-qubit density matrix to a single qubit.

    Args:
        rho: 8x8 density matrix (leading batch axes are allowed).
        keep: subsystem to keep, either ``"A"``/``"B"``/``"C"`` or 0/1/2.

    Returns:
        The 2x2 reduced density matrix.
    """
    rho = np.asarray(rho)
    if rho.shape[-2:] != (8, 8):
        raise ValueError(f"expected an 8x8 three-qubit operator, got shape {rho.shape[-2:]}")
    k = _subsystem_index(keep)
    t = rho.reshape(rho.shape[:-2] + (2, 2, 2, 2, 2, 2))
    ket = "abc"
    bra = "def"
    traced_bra = "".join(ket[i] if i != k else bra[i] for i in range(3))
    return np.einsum(f"...{ket}{traced_bra}->...{ket[k]}{bra[k]}", t)


def hermitian_eigenvalues_ascending(m, tol: float = 1e-10) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted ascending.

    The input is symmetrized before diagonalization so that round-off
    asymmetries left by channel application do not leak into the spectrum.

    Raises:
        ValueError: if ``m`` is not square or its Hermiticity defect exceeds
            ``tol``.
    """
    m = np.asarray(m)
    if m.ndim < 2 or m.shape[-1] != m.shape[-2]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    defect = hermiticity_defect(m)
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian: defect {defect:.3e} exceeds tol {tol:.1e}")
    # LAPACK heevd returns ascending eigenvalues
    return np.linalg.eigvalsh(symmetrize(m))


def clamp_probabilities(values, floor: float = -HERMITIAN_TOL) -> np.ndarray:
    """Zero out tiny negative eigenvalues in ``[floor, 0)``."""
    values = np.array(values, dtype=float)
    values[(values < 0) & (values >= floor)] = 0.0
    return values
