"""Oracle-versus-numeric agreement over every family with a closed form."""
import math
from dataclasses import dataclass

import numpy as np

from .channels import ChannelScenario
from .model import DEFAULT_EPS, StateSpec
from .sweep import DEFAULT_GRID_1D, DEFAULT_GRID_2D, sweep_1d, sweep_2d

AGREEMENT_TOL = 1e-9
REPETITIONS = (1, 2, 3, 4, 10, 100)
TRISIDE_GAMMAS = (0.25, 0.5, 0.75, 1.0)
GHZ_LIKE_AMPLITUDES = (0.5, math.sqrt(0.75))  # a^2 = 0.25 and 0.75


@dataclass(frozen=True)
class Family:
    name: str
    scenario: ChannelScenario
    surface: bool = False


@dataclass(frozen=True)
class FamilyResult:
    family: Family
    points: int
    max_abs_err: float | None

    @property
    def skipped(self) -> bool:
        """No closed form applies (e.g. unordered energies)."""
        return self.max_abs_err is None

    @property
    def passed(self) -> bool:
        return self.max_abs_err is not None and self.max_abs_err <= AGREEMENT_TOL


def families(repetitions=REPETITIONS, gammas=TRISIDE_GAMMAS) -> list[Family]:
    """Every scenario family with a closed-form capacity."""
    ghz = StateSpec("ghz")
    out = []
    for kind in ("bf", "pf", "bpf", "dep", "dp"):
        out.append(Family(f"ghz/{kind}/all/n=1", ChannelScenario(ghz, kind, "all")))
    for n in repetitions:
        out.append(Family(f"ghz/adc/first/n={n}", ChannelScenario(ghz, "adc", "first", n=n)))
    for kind in ("pf", "dp"):
        for n in repetitions:
            if n > 1:
                out.append(Family(f"ghz/{kind}/all/n={n}", ChannelScenario(ghz, kind, "all", n=n)))
    for gamma in gammas:
        for n in repetitions:
            out.append(Family(
                f"ghz/pf/tri/gamma={gamma:g}/n={n}",
                ChannelScenario(ghz, "pf", "tri", 0.0, 0.0, gamma, n), surface=True,
            ))
    for a in GHZ_LIKE_AMPLITUDES:
        like = StateSpec("ghzlike", a)
        tag = f"ghzlike(a^2={a * a:.2f})"
        for kind in ("pf", "dp"):
            for n in repetitions:
                out.append(Family(f"{tag}/{kind}/all/n={n}", ChannelScenario(like, kind, "all", n=n)))
        for n in repetitions:
            out.append(Family(f"{tag}/adc/first/n={n}", ChannelScenario(like, "adc", "first", n=n)))
    like = StateSpec("ghzlike", GHZ_LIKE_AMPLITUDES[0])
    for gamma in gammas:
        for n in repetitions:
            out.append(Family(
                f"ghzlike(a^2=0.25)/pf/tri/gamma={gamma:g}/n={n}",
                ChannelScenario(like, "pf", "tri", 0.0, 0.0, gamma, n), surface=True,
            ))
    return out


def check_family(family: Family, eps=DEFAULT_EPS, grid_1d=DEFAULT_GRID_1D,
                 grid_2d=DEFAULT_GRID_2D) -> FamilyResult:
    if family.surface:
        records = sweep_2d(family.scenario, (0.0, 1.0, grid_2d), (0.0, 1.0, grid_2d), eps=eps)
    else:
        records = sweep_1d(family.scenario, 0.0, 1.0, grid_1d, eps=eps)
    errs = [r.abs_err for r in records]
    if any(e is None for e in errs):
        return FamilyResult(family, len(records), None)
    return FamilyResult(family, len(records), float(np.max(errs)))


def run_verification(eps=DEFAULT_EPS, grid_1d=DEFAULT_GRID_1D, grid_2d=DEFAULT_GRID_2D,
                     repetitions=REPETITIONS, gammas=TRISIDE_GAMMAS) -> list[FamilyResult]:
    return [check_family(f, eps, grid_1d, grid_2d) for f in families(repetitions, gammas)]
