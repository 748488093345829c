"""Capacity over parameter grids, and detectors for features of the curves.

Grid points are evaluated together as one stacked array, so the record
order always follows the grid index.
"""
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize

from . import oracle
from .capacity import capacity_many
from .channels import ChannelScenario, evolve
from .model import DEFAULT_EPS, tripartite_hamiltonian

DEFAULT_GRID_1D = 1001
DEFAULT_GRID_2D = 101
ZERO_TOL = 1e-6
FLAT_TOL = 1e-3
WINDOW = 10
# below this a grid point is already a numerical zero and is not refined
_NUMERICAL_ZERO = 1e-12


@dataclass(frozen=True)
class SweepRecord:
    p: float
    q: float | None
    n: int
    capacity_numeric: float
    capacity_oracle: float | None = None
    abs_err: float | None = None

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "n": self.n,
            "capacity_numeric": self.capacity_numeric,
            "capacity_oracle": self.capacity_oracle,
            "abs_err": self.abs_err,
        }


@dataclass
class FeatureReport:
    sudden_death_points: list[float] = field(default_factory=list)
    frozen_onset: float | None = None
    frozen_value: float | None = None
    crossing_x: float | None = None

    def as_dict(self) -> dict:
        return {
            "sudden_death_points": list(self.sudden_death_points),
            "frozen_onset": self.frozen_onset,
            "frozen_value": self.frozen_value,
            "crossing_x": self.crossing_x,
        }


def _grid(p_min, p_max, count):
    if count < 2:
        raise ValueError(f"grid needs at least 2 points, got {count}")
    if not 0.0 <= p_min <= p_max <= 1.0:
        raise ValueError(f"grid range must satisfy 0 <= lo <= hi <= 1, got {p_min}:{p_max}")
    return np.linspace(p_min, p_max, count)


def numeric_capacities(scenario: ChannelScenario, p, q=None, eps=DEFAULT_EPS) -> np.ndarray:
    """Numeric capacity for every strength in ``p`` (and ``q`` for tri-side)."""
    s = scenario
    h = tripartite_hamiltonian(*eps)
    q = s.q if q is None else q
    rho = evolve(s.state.density_matrix(), s.kind, s.topology, s.n, p, q, s.gamma)
    return capacity_many(rho, h)


def _records(p, q, n, numeric, closed):
    records = []
    for i in range(len(p)):
        qi = None if q is None else float(q[i])
        if closed is None:
            records.append(SweepRecord(float(p[i]), qi, n, float(numeric[i])))
        else:
            c = float(closed[i])
            records.append(SweepRecord(float(p[i]), qi, n, float(numeric[i]), c, abs(float(numeric[i]) - c)))
    return records


def sweep_1d(scenario: ChannelScenario, p_min=0.0, p_max=1.0, count=DEFAULT_GRID_1D,
             eps=DEFAULT_EPS) -> list[SweepRecord]:
    """Capacity as a function of ``p`` with everything else held fixed."""
    p = _grid(p_min, p_max, count)
    numeric = numeric_capacities(scenario, p, eps=eps)
    closed = oracle.scenario_closed_form(scenario, eps, p=p)
    if closed is not None:
        closed = np.broadcast_to(closed, p.shape)
    q = None if scenario.topology != "tri" else np.full(p.shape, scenario.q)
    return _records(p, q, scenario.n, numeric, closed)


def sweep_2d(scenario: ChannelScenario, p_grid=(0.0, 1.0, DEFAULT_GRID_2D),
             q_grid=(0.0, 1.0, DEFAULT_GRID_2D), gamma=None, n=None,
             eps=DEFAULT_EPS) -> list[SweepRecord]:
    """Capacity over a ``(p, q)`` surface for a tri-side scenario.

    Records are row-major: ``p`` is the slow index, ``q`` the fast one.
    ``gamma`` and ``n`` override the scenario's values when given.
    """
    if scenario.topology != "tri":
        raise ValueError("sweep_2d needs a tri-side scenario")
    s = ChannelScenario(
        scenario.state, scenario.kind, "tri", scenario.p, scenario.q,
        scenario.gamma if gamma is None else gamma,
        scenario.n if n is None else n,
    )
    ps = _grid(*p_grid)
    qs = _grid(*q_grid)
    p = np.repeat(ps, len(qs))
    q = np.tile(qs, len(ps))
    numeric = numeric_capacities(s, p, q, eps=eps)
    closed = oracle.scenario_closed_form(s, eps, p=p, q=q)
    return _records(p, q, s.n, numeric, closed)


def _check_records(records):
    if not records:
        raise ValueError("no sweep records given")
    p = np.array([r.p for r in records])
    c = np.array([r.capacity_numeric for r in records])
    if np.any(np.diff(p) < 0):
        raise ValueError("records must be sorted by p")
    return p, c


def find_sudden_death(records, zero_tol: float = ZERO_TOL, capacity_fn=None,
                      xtol: float = 1e-9) -> list[float]:
    """Isolated zeros of a 1-D capacity curve.

    A run of grid points with capacity ``<= zero_tol`` counts when the curve
    is above ``zero_tol`` on both sides of it. A curve that reaches zero and
    stays there is not reported. When ``capacity_fn`` (a callable of ``p``)
    is given, each zero is refined by bounded minimization between the
    neighbouring positive grid points, unless the grid point is already a
    numerical zero.
    """
    p, c = _check_records(records)
    low = c <= zero_tol
    points = []
    i = 0
    while i < len(c):
        if not low[i]:
            i += 1
            continue
        j = i
        while j + 1 < len(c) and low[j + 1]:
            j += 1
        if i > 0 and j < len(c) - 1:
            k = i + int(np.argmin(c[i:j + 1]))
            x = float(p[k])
            if capacity_fn is not None and c[k] > _NUMERICAL_ZERO:
                res = optimize.minimize_scalar(
                    capacity_fn, bounds=(p[i - 1], p[j + 1]), method="bounded",
                    options={"xatol": xtol},
                )
                if res.fun <= c[k]:
                    x = float(res.x)
            points.append(x)
        i = j + 1
    return points


def detect_frozen(records, flat_tol: float = FLAT_TOL, window: int = WINDOW):
    """Onset of a frozen (flat) tail of a 1-D capacity curve.

    The onset is the smallest ``p`` from which every later capacity lies
    within ``flat_tol`` of the capacity at the last grid point. The flat
    tail must hold at least ``window`` records, otherwise ``None`` is
    returned.

    Returns:
        ``(onset, frozen_value)`` or ``None``.
    """
    p, c = _check_records(records)
    if window < 1 or window >= len(c):
        raise ValueError(f"window must satisfy 1 <= window < {len(c)}, got {window}")
    final = c[-1]
    off = np.abs(c - final) > flat_tol
    start = int(np.flatnonzero(off)[-1]) + 1 if off.any() else 0
    if len(c) - start < window:
        return None
    return float(p[start]), float(final)


def find_crossing(a: float, n: int = 1, tol: float = 1e-12):
    """Damping strength where the two leading eigenvalues of a damped GHZ-like state swap.

    Returns ``None`` when they do not cross inside ``(0, 1)``, which happens
    for ``a^2 >= 1/2``.
    """
    return oracle.adc_crossing(a, n, tol)


def feature_report(scenario: ChannelScenario, records, zero_tol: float = ZERO_TOL,
                   flat_tol: float = FLAT_TOL, window: int = WINDOW,
                   eps=DEFAULT_EPS) -> FeatureReport:
    """Sudden death, frozen tail and (for damped GHZ-like states) the crossing."""

    def capacity_at(x):
        return float(numeric_capacities(scenario, np.array([x]), eps=eps)[0])

    report = FeatureReport(find_sudden_death(records, zero_tol, capacity_at))
    frozen = detect_frozen(records, flat_tol, window)
    if frozen is not None:
        report.frozen_onset, report.frozen_value = frozen
    if (scenario.state.kind == "ghzlike" and scenario.kind == "adc"
            and scenario.topology == "first"):
        report.crossing_x = find_crossing(scenario.state.a, scenario.n)
    return report
