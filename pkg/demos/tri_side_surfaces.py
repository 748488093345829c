"""Independent phase flips on A, B and C with strengths p, q and gamma.

With gamma = 0.5 the qubit C channel erases the GHZ coherence outright, so
the surface is flat whatever p and q are. For gamma strictly between 0 and 1
the surface relaxes toward its floor as the repetition count grows; at
gamma = 1 the qubit C flip is deterministic and does not damp anything.

    python3 demos/tri_side_surfaces.py [outdir]
"""
import pathlib
import sys

import numpy as np

from ghz_battery import ChannelScenario, StateSpec, sweep_2d
from ghz_battery.serialize import records_to_csv

outdir = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else None

for label, state in (("ghz", StateSpec("ghz")), ("ghzlike_a2_0.25", StateSpec("ghzlike", 0.5))):
    print(label)
    for gamma in (0.25, 0.5, 0.75, 1.0):
        for n in (1, 10):
            s = ChannelScenario(state, "pf", "tri", 0.0, 0.0, gamma, n)
            records = sweep_2d(s)
            c = np.array([r.capacity_numeric for r in records])
            print(f"  gamma={gamma:<5} n={n:<3} min={c.min():.6f} max={c.max():.6f}")
            if outdir is not None:
                outdir.mkdir(parents=True, exist_ok=True)
                (outdir / f"{label}_pf_tri_g{gamma}_n{n}.csv").write_text(records_to_csv(records))
