"""Unbalanced GHZ-like states a|000> + sqrt(1-a^2)|111>.

Damping qubit A moves population from |111> to |011>. When a^2 < 1/2 that
population eventually outgrows the coherent block, and the capacity formula
switches branch at the crossing strength.

    python3 demos/ghz_like_states.py
"""
import math

from ghz_battery import ChannelScenario, StateSpec, find_crossing, sweep_1d
from ghz_battery.oracle import ghzlike_adc_eigenvalues

for a2 in (0.25, 0.75):
    state = StateSpec("ghzlike", math.sqrt(a2))
    print(f"a^2 = {a2}")
    for n in (1, 2, 10):
        x = find_crossing(state.a, n)
        if x is None:
            print(f"  n={n:<3} no crossing")
        else:
            lam5, _, lam7 = ghzlike_adc_eigenvalues(state.a, x, n)
            print(f"  n={n:<3} crossing at p={x:.9f} (eigenvalues {lam5:.6f}, {lam7:.6f})")
    for kind, side in (("adc", "first"), ("pf", "all"), ("dp", "all")):
        records = sweep_1d(ChannelScenario(state, kind, side))
        ends = records[0].capacity_numeric, records[500].capacity_numeric, records[-1].capacity_numeric
        print(f"  {kind:>3}: C(0)={ends[0]:.4f} C(0.5)={ends[1]:.4f} C(1)={ends[2]:.4f}")
