"""Capacity of three-qubit GHZ and GHZ-like quantum batteries under Markovian noise."""
from .capacity import CapacityResult, battery_capacity, capacity_many, ergotropy, passive_state
from .channels import (
    ChannelScenario, QubitChannel, apply_on_first, apply_on_qubit, apply_product_channel,
    evolve, kraus_operators, make_channel, run_scenario,
)
from .model import (
    DEFAULT_EPS, EnergyOrderingWarning, QubitHamiltonian, StateSpec, TripartiteHamiltonian,
    ghz_like_state, ghz_state, tripartite_hamiltonian,
)
from .sweep import (
    FeatureReport, SweepRecord, detect_frozen, feature_report, find_crossing,
    find_sudden_death, sweep_1d, sweep_2d,
)
from .tensor import dagger, hermitian_eigenvalues_ascending, kron, partial_trace

__all__ = [
    "CapacityResult", "battery_capacity", "capacity_many", "ergotropy", "passive_state",
    "ChannelScenario", "QubitChannel", "apply_on_first", "apply_on_qubit",
    "apply_product_channel", "evolve", "kraus_operators", "make_channel", "run_scenario",
    "DEFAULT_EPS", "EnergyOrderingWarning", "QubitHamiltonian", "StateSpec",
    "TripartiteHamiltonian", "ghz_like_state", "ghz_state", "tripartite_hamiltonian",
    "FeatureReport", "SweepRecord", "detect_frozen", "feature_report", "find_crossing",
    "find_sudden_death", "sweep_1d", "sweep_2d",
    "dagger", "hermitian_eigenvalues_ascending", "kron", "partial_trace",
]
