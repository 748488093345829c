"""Capacity against ergotropy along a damping sweep.

Ergotropy counts only the work a unitary can extract. Capacity measures the
full spread between the most and least energetic unitary orbit points, so
the two need not track each other.

    python3 demos/ergotropy_and_capacity.py
"""
import numpy as np

from ghz_battery import (
    ChannelScenario, StateSpec, battery_capacity, ergotropy, run_scenario, tripartite_hamiltonian,
)

h = tripartite_hamiltonian(0.5, 0.3, 0.1)
print("   p   capacity  ergotropy")
for p in np.linspace(0, 1, 11):
    rho = run_scenario(ChannelScenario(StateSpec("ghz"), "adc", "first", float(p)))
    print(f"{p:4.1f}   {battery_capacity(rho, h).capacity:8.5f}   {ergotropy(rho, h):8.5f}")
