"""Initial states and the tripartite Hamiltonian."""
import itertools
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .tensor import I2, SIGMA_Z, kron

DEFAULT_EPS = (0.5, 0.3, 0.1)


class EnergyOrderingWarning(UserWarning):
    """Energies violate ``0 <= epsC <= epsB <= epsA``."""


@dataclass(frozen=True)
class StateSpec:
    """Initial state family.

    ``kind`` is ``"ghz"`` or ``"ghzlike"``. For GHZ-like states ``a`` is the
    amplitude of ``|000>``; it is ignored for GHZ.
    """

    kind: str = "ghz"
    a: float = 1 / math.sqrt(2)

    def __post_init__(self):
        if self.kind not in ("ghz", "ghzlike"):
            raise ValueError(f"unknown state kind {self.kind!r}")
        if self.kind == "ghzlike" and not 0.0 <= self.a <= 1.0:
            raise ValueError(f"GHZ-like amplitude a must lie in [0, 1], got {self.a}")

    @property
    def coefficients(self) -> tuple[float, float, float]:
        """``(c1, c2, c3) = (a^2, a*sqrt(1-a^2), 1-a^2)``."""
        if self.kind == "ghz":
            return 0.5, 0.5, 0.5
        return ghz_like_coefficients(self.a)

    def density_matrix(self) -> np.ndarray:
        if self.kind == "ghz":
            return ghz_state()
        return ghz_like_state(self.a)


def ghz_like_coefficients(a: float) -> tuple[float, float, float]:
    a2 = a * a
    return a2, a * math.sqrt(max(0.0, 1.0 - a2)), 1.0 - a2


def ghz_state() -> np.ndarray:
    """``|GHZ><GHZ|`` with ``|GHZ> = (|000> + |111>)/sqrt(2)``."""
    rho = np.zeros((8, 8), dtype=complex)
    rho[0, 0] = rho[0, 7] = rho[7, 0] = rho[7, 7] = 0.5
    return rho


def ghz_like_state(a: float) -> np.ndarray:
    """Projector onto ``a|000> + sqrt(1-a^2)|111>``.

    Raises:
        ValueError: if ``a`` is outside ``[0, 1]``.
    """
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"GHZ-like amplitude a must lie in [0, 1], got {a}")
    c1, c2, c3 = ghz_like_coefficients(a)
    rho = np.zeros((8, 8), dtype=complex)
    rho[0, 0] = c1
    rho[0, 7] = rho[7, 0] = c2
    rho[7, 7] = c3
    return rho


@dataclass(frozen=True)
class TripartiteHamiltonian:
    """``epsA sz(x)I(x)I + epsB I(x)sz(x)I + epsC I(x)I(x)sz``.

    ``levels`` holds the eight energies sorted ascending. ``ordered`` is False
    when the energies break ``0 <= epsC <= epsB <= epsA``; numeric capacity
    stays valid then, but the closed forms in :mod:`ghz_battery.oracle` do not.
    """

    epsA: float
    epsB: float
    epsC: float
    levels: np.ndarray = field(repr=False, compare=False)
    ordered: bool = True

    @property
    def eps(self) -> tuple[float, float, float]:
        return self.epsA, self.epsB, self.epsC

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(self.diagonal).astype(complex)

    @property
    def diagonal(self) -> np.ndarray:
        """Energies in computational-basis order (not sorted)."""
        return np.array([
            self.epsA * sa + self.epsB * sb + self.epsC * sc
            for sa, sb, sc in itertools.product((1, -1), repeat=3)
        ])

    @property
    def dim(self) -> int:
        return 8


def tripartite_hamiltonian(epsA: float, epsB: float, epsC: float) -> TripartiteHamiltonian:
    """Build the tripartite Hamiltonian and its ascending energy levels.

    Emits :class:`EnergyOrderingWarning` if the energies are not ordered as
    ``0 <= epsC <= epsB <= epsA``.
    """
    ordered = 0.0 <= epsC <= epsB <= epsA
    if not ordered:
        warnings.warn(
            f"energies ({epsA}, {epsB}, {epsC}) violate 0 <= epsC <= epsB <= epsA",
            EnergyOrderingWarning,
            stacklevel=2,
        )
    diag = np.array([
        epsA * sa + epsB * sb + epsC * sc
        for sa, sb, sc in itertools.product((1, -1), repeat=3)
    ])
    return TripartiteHamiltonian(float(epsA), float(epsB), float(epsC), np.sort(diag), ordered)


def tripartite_operator(epsA: float, epsB: float, epsC: float) -> np.ndarray:
    """The Hamiltonian assembled from Kronecker products, for cross-checks."""
    return (
        epsA * kron(SIGMA_Z, I2, I2)
        + epsB * kron(I2, SIGMA_Z, I2)
        + epsC * kron(I2, I2, SIGMA_Z)
    )


@dataclass(frozen=True)
class QubitHamiltonian:
    """Single-qubit ``eps * sigma_z``, used for reduced-state capacities."""

    eps: float

    @property
    def matrix(self) -> np.ndarray:
        return self.eps * SIGMA_Z

    @property
    def levels(self) -> np.ndarray:
        return np.sort(np.array([self.eps, -self.eps]))

    @property
    def diagonal(self) -> np.ndarray:
        return np.array([self.eps, -self.eps])

    @property
    def dim(self) -> int:
        return 2


def closed_form_level_order(epsA: float, epsB: float, epsC: float) -> list[float]:
    """Eight energies in the order listed for the ordered case.

    This order is ascending only when additionally ``epsA >= epsB + epsC``.
    """
    return [
        -epsA - epsB - epsC, -epsA - epsB + epsC, -epsA + epsB - epsC, -epsA + epsB + epsC,
        epsA - epsB - epsC, epsA - epsB + epsC, epsA + epsB - epsC, epsA + epsB + epsC,
    ]
