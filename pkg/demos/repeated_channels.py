"""Repeated dephasing and damping drive the GHZ capacity to a plateau.

For each repetition count the script reports where the curve settles within
1e-3 of its end value. Larger counts settle at smaller strengths.

    python3 demos/repeated_channels.py
"""
from ghz_battery import ChannelScenario, StateSpec, detect_frozen, sweep_1d

ghz = StateSpec("ghz")

for kind, side in (("dp", "all"), ("adc", "first")):
    print(f"{kind} on {side}")
    for n in (1, 2, 3, 4, 10, 100):
        records = sweep_1d(ChannelScenario(ghz, kind, side, n=n))
        frozen = detect_frozen(records, flat_tol=1e-3, window=5)
        mid = records[500].capacity_numeric
        if frozen is None:
            print(f"  n={n:<4} C(0.5)={mid:.6f}  no plateau on this grid")
        else:
            onset, value = frozen
            print(f"  n={n:<4} C(0.5)={mid:.6f}  plateau {value:.6f} from p={onset:.3f}")
