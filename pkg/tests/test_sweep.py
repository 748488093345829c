import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ghz_battery.channels import ChannelScenario
from ghz_battery.model import StateSpec
from ghz_battery.sweep import (
    SweepRecord, detect_frozen, feature_report, find_crossing, find_sudden_death, sweep_1d,
    sweep_2d,
)

GHZ = StateSpec("ghz")
LIKE = StateSpec("ghzlike", 0.5)


def curve(values, p=None):
    p = np.linspace(0, 1, len(values)) if p is None else p
    return [SweepRecord(float(x), None, 1, float(c)) for x, c in zip(p, values)]


def test_damping_sweep_is_linear():
    records = sweep_1d(ChannelScenario(GHZ, "adc", "first"), 0, 1, 1001)
    assert len(records) == 1001
    for r in records:
        assert abs(r.capacity_numeric - (1.8 - 0.2 * r.p)) <= 1e-9
        assert r.abs_err <= 1e-9
        assert r.q is None and r.n == 1


def test_depolarizing_sweep_zero_at_three_quarters():
    records = sweep_1d(ChannelScenario(GHZ, "dep", "all"), 0, 1, 1001)
    at = [r for r in records if abs(r.p - 0.75) < 1e-12]
    assert len(at) == 1 and abs(at[0].capacity_numeric) <= 1e-12


@pytest.mark.parametrize("kind,topology", [("bf", "all"), ("dep", "all"), ("adc", "first"), ("bpf", "first")])
def test_first_grid_point_is_pure(kind, topology):
    records = sweep_1d(ChannelScenario(LIKE, kind, topology), 0, 1, 11)
    assert records[0].capacity_numeric == pytest.approx(1.8, abs=1e-12)


def test_uncovered_scenario_has_no_oracle_column():
    records = sweep_1d(ChannelScenario(LIKE, "bf", "all"), 0, 1, 5)
    assert all(r.capacity_oracle is None and r.abs_err is None for r in records)


def test_sweep_rejects_bad_grid():
    s = ChannelScenario(GHZ, "pf", "all")
    with pytest.raises(ValueError):
        sweep_1d(s, 0, 1, 1)
    with pytest.raises(ValueError):
        sweep_1d(s, 0.5, 0.2, 5)
    with pytest.raises(ValueError):
        sweep_2d(s)


def test_surface_constant_for_half_phase_flip_on_c():
    s = ChannelScenario(GHZ, "pf", "tri", 0.0, 0.0, 0.5, 3)
    records = sweep_2d(s, (0, 1, 101), (0, 1, 101))
    assert len(records) == 101 * 101
    assert max(abs(r.capacity_numeric - 1.6) for r in records) <= 1e-9


def test_surface_ghz_like_constant():
    s = ChannelScenario(LIKE, "pf", "tri", 0.0, 0.0, 0.5, 1)
    records = sweep_2d(s, (0, 1, 21), (0, 1, 21), n=10)
    assert all(r.n == 10 for r in records)
    assert max(abs(r.capacity_numeric - 1.7) for r in records) <= 1e-9


def test_surface_row_major_order():
    s = ChannelScenario(GHZ, "pf", "tri", 0.0, 0.0, 1.0)
    records = sweep_2d(s, (0, 1, 3), (0, 1, 3))
    assert [(r.p, r.q) for r in records] == [
        (0, 0), (0, 0.5), (0, 1), (0.5, 0), (0.5, 0.5), (0.5, 1), (1, 0), (1, 0.5), (1, 1)]
    centre = records[4]
    assert centre.capacity_numeric == pytest.approx(1.6, abs=1e-12)


def test_surface_gamma_override():
    s = ChannelScenario(GHZ, "pf", "tri", 0.0, 0.0, 0.0)
    records = sweep_2d(s, (0, 1, 5), (0, 1, 5), gamma=0.5)
    assert all(abs(r.capacity_numeric - 1.6) <= 1e-12 for r in records)


def test_sudden_death_bit_phase_flip():
    s = ChannelScenario(GHZ, "bpf", "all")
    records = sweep_1d(s)
    report = feature_report(s, records)
    assert report.sudden_death_points == [pytest.approx(0.5, abs=1e-9)]


def test_sudden_death_depolarizing():
    s = ChannelScenario(GHZ, "dep", "all")
    assert feature_report(s, sweep_1d(s)).sudden_death_points == [pytest.approx(0.75, abs=1e-9)]


def test_sudden_death_refined_off_grid():
    # a grid that misses p = 0.5 still locates it by refinement
    s = ChannelScenario(GHZ, "bpf", "all")
    records = sweep_1d(s, 0, 1, 1000)
    report = feature_report(s, records, zero_tol=1e-2)
    assert len(report.sudden_death_points) == 1
    assert report.sudden_death_points[0] == pytest.approx(0.5, abs=1e-9)


def test_no_sudden_death_for_damping():
    s = ChannelScenario(GHZ, "adc", "first")
    assert feature_report(s, sweep_1d(s)).sudden_death_points == []


def test_zero_that_stays_is_not_sudden_death():
    records = curve([1.0, 0.5, 0.0, 0.0, 0.0])
    assert find_sudden_death(records) == []
    assert detect_frozen(records, window=3) == (0.5, 0.0)


def test_sudden_death_rejects_bad_records():
    with pytest.raises(ValueError):
        find_sudden_death([])
    with pytest.raises(ValueError):
        find_sudden_death(curve([1, 0, 1], p=[0.0, 1.0, 0.5]))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(1e-5, 2.0), min_size=2, max_size=50))
def test_positive_curve_has_no_sudden_death(values):
    assert find_sudden_death(curve(values)) == []


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(0.0, 2.0), min_size=3, max_size=40))
def test_reported_points_touch_zero_and_recover(values):
    records = curve(values)
    c = np.array(values)
    p = np.array([r.p for r in records])
    for x in find_sudden_death(records):
        i = int(np.flatnonzero(p == x)[0])
        assert c[i] <= 1e-6
        assert np.any(c[:i] > 1e-6) and np.any(c[i + 1:] > 1e-6)


def test_frozen_dephasing_hundred_passes():
    s = ChannelScenario(GHZ, "dp", "all", n=100)
    onset, value = detect_frozen(sweep_1d(s), 1e-3)
    assert value == pytest.approx(1.6, abs=1e-12)
    assert onset < 0.5
    # first grid point where the remaining excess is within tolerance
    expected = 1 - (1e-3 / 0.2) ** (1 / 300)
    assert expected <= onset <= expected + 1e-3


def test_frozen_damping_single_pass_needs_short_window():
    s = ChannelScenario(GHZ, "adc", "first")
    records = sweep_1d(s)
    # the flat tail holds only the last six grid points
    assert detect_frozen(records, 1e-3, window=10) is None
    onset, value = detect_frozen(records, 1e-3, window=5)
    assert onset == pytest.approx(0.995, abs=1e-12)
    assert value == pytest.approx(1.6, abs=1e-12)


def test_frozen_constant_curve_starts_at_grid_start():
    s = ChannelScenario(GHZ, "pf", "tri", 0.0, 0.3, 0.5)
    records = sweep_1d(s, 0.2, 0.9, 101)
    onset, value = detect_frozen(records)
    assert onset == pytest.approx(0.2)
    assert value == pytest.approx(1.6, abs=1e-12)


def test_frozen_window_validation():
    with pytest.raises(ValueError):
        detect_frozen(curve([1, 1, 1]), window=3)
    with pytest.raises(ValueError):
        detect_frozen(curve([1, 1, 1]), window=0)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(0.0, 2.0), min_size=12, max_size=40), st.floats(1e-6, 0.5), st.floats(1e-6, 0.5))
def test_frozen_onset_monotone_in_tolerance(values, t1, t2):
    tight, loose = sorted((t1, t2))
    records = curve(values)
    a = detect_frozen(records, tight, window=1)
    b = detect_frozen(records, loose, window=1)
    assert b[0] <= a[0]


def test_frozen_onset_earlier_with_more_passes():
    for kind, topology in (("dp", "all"), ("adc", "first")):
        onsets = []
        for n in (2, 3, 4, 10, 100):
            onset, value = detect_frozen(sweep_1d(ChannelScenario(GHZ, kind, topology, n=n)), 1e-3)
            assert value == pytest.approx(1.6, abs=1e-9)
            onsets.append(onset)
        assert all(b <= a for a, b in zip(onsets, onsets[1:]))


def test_crossing_values():
    assert find_crossing(0.5, 1) == pytest.approx(2 / 3, abs=1e-9)
    assert find_crossing(math.sqrt(0.75), 1) is None


def test_feature_report_crossing_only_for_damped_ghz_like():
    s = ChannelScenario(LIKE, "adc", "first")
    report = feature_report(s, sweep_1d(s, count=101))
    assert report.crossing_x == pytest.approx(2 / 3, abs=1e-9)
    s = ChannelScenario(GHZ, "adc", "first")
    assert feature_report(s, sweep_1d(s, count=101)).crossing_x is None


def test_record_dicts():
    r = SweepRecord(0.1, None, 2, 1.5, 1.5, 0.0)
    assert r.as_dict() == {"p": 0.1, "q": None, "n": 2, "capacity_numeric": 1.5,
                           "capacity_oracle": 1.5, "abs_err": 0.0}
