"""GHZ battery capacity after one pass of each noise channel.

Prints a coarse table of capacity against noise strength and the isolated
zeros of each curve. Pass a directory to also write the full 1001-point
sweeps as CSV.

    python3 demos/single_pass_channels.py [outdir]
"""
import pathlib
import sys

import numpy as np

from ghz_battery import ChannelScenario, StateSpec, feature_report, sweep_1d
from ghz_battery.serialize import records_to_csv

ghz = StateSpec("ghz")
# damping acts on qubit A only, the rest on all three qubits
setups = {
    "bf": "all", "pf": "all", "bpf": "all", "dep": "all", "dp": "all", "adc": "first",
}
outdir = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else None

shown = np.linspace(0, 1, 11)
print("p      " + "".join(f"{k:>8}" for k in setups))
curves = {}
for kind, side in setups.items():
    curves[kind] = sweep_1d(ChannelScenario(ghz, kind, side))
for x in shown:
    i = int(round(x * 1000))
    print(f"{x:4.1f}   " + "".join(f"{curves[k][i].capacity_numeric:8.4f}" for k in setups))

print()
for kind, side in setups.items():
    s = ChannelScenario(ghz, kind, side)
    report = feature_report(s, curves[kind])
    worst = max(r.abs_err for r in curves[kind])
    print(f"{kind:>4}: zeros at {report.sudden_death_points}, closed-form gap {worst:.1e}")
    if outdir is not None:
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / f"ghz_{kind}_{side}.csv").write_text(records_to_csv(curves[kind]))
