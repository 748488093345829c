"""Closed-form capacities for the scenario families with analytic solutions.

These expressions are transcribed independently of the numeric pipeline
(no channel is applied, no matrix is diagonalized) and serve as ground
truth for it. Every function broadcasts over array-valued strengths.

All closed forms assume ordered energies ``0 <= epsC <= epsB <= epsA``; the
bit flip and bit-phase flip forms further assume ``epsA >= epsB + epsC``.
Requests outside those regimes are rejected with ``ValueError``.
"""
import math

import numpy as np
from scipy import optimize

from .model import DEFAULT_EPS, ghz_like_coefficients

CLOSED_FORM_KINDS = ("bf", "pf", "bpf", "dep", "dp", "adc")


def _sums(eps):
    """``(S+, S-, 3A-B-C)`` for energies ``(A, B, C)``."""
    a, b, c = _check_eps(eps)
    return a + b + c, a + b - c, 3 * a - b - c


def _check_eps(eps):
    a, b, c = (float(e) for e in eps)
    if not 0.0 <= c <= b <= a:
        raise ValueError(f"closed forms need 0 <= epsC <= epsB <= epsA, got {(a, b, c)}")
    return a, b, c


def _check_p(p, name="p"):
    p = np.asarray(p, dtype=float)
    if np.any(p < 0.0) or np.any(p > 1.0):
        raise ValueError(f"{name} must lie in [0, 1]")
    return p


def _check_n(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"repetition count n must be a positive integer, got {n}")
    return int(n)


def _check_a(a):
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"GHZ-like amplitude a must lie in [0, 1], got {a}")
    return float(a)


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def ghz_closed_form(kind: str, p, eps=DEFAULT_EPS):
    """Capacity of GHZ after one pass of a channel.

    ``adc`` acts on the first qubit only; every other kind acts on all three
    qubits.
    """
    if kind not in CLOSED_FORM_KINDS:
        raise ValueError(f"no closed form for channel kind {kind!r}")
    p = _check_p(p)
    s_plus, s_minus, s_bf = _sums(eps)
    a, b, c = _check_eps(eps)
    if kind in ("bf", "bpf") and a < b + c:
        raise ValueError(f"the {kind} closed form needs epsA >= epsB + epsC")

    if kind == "bf":
        value = 2 * (1 - 3 * p + 3 * p**2) * s_plus + 2 * (p - p**2) * s_bf
    elif kind == "dp":
        value = (2 - 3 * p + 3 * p**2 - p**3) * s_plus + (3 * p - 3 * p**2 + p**3) * s_minus
    elif kind == "pf":
        hi = 1 - 3 * p + 6 * p**2 - 4 * p**3
        lo = 3 * p - 6 * p**2 + 4 * p**3
        value = np.where(
            p <= 0.5,
            2 * hi * s_plus + 2 * lo * s_minus,
            2 * lo * s_plus + 2 * hi * s_minus,
        )
    elif kind == "dep":
        hi = 1 - 10 * p / 3 + 32 * p**2 / 9 - 32 * p**3 / 27
        lo = 2 * p / 3 - 16 * p**2 / 9 + 32 * p**3 / 27
        value = np.where(
            p <= 0.75,
            2 * hi * s_plus + 2 * lo * s_minus,
            2 * lo * s_plus + 2 * hi * s_minus,
        )
    elif kind == "bpf":
        top = 1 - 3 * p + 3 * p**2 - 2 * p**3
        mid = p - 3 * p**2 + 2 * p**3
        value = np.where(
            p <= 0.5,
            2 * top * s_plus + 2 * mid * s_bf,
            -2 * top * s_plus - 2 * mid * s_bf,
        )
    else:  # adc
        value = 2 * (1 - p / 2) * s_plus + p * s_minus
    return _out(value)


def ghz_n_fold_closed_form(kind: str, p, n: int, eps=DEFAULT_EPS):
    """Capacity of GHZ after ``n`` passes.

    ``pf`` and ``dp`` act on all three qubits, ``adc`` on the first only.
    """
    p = _check_p(p)
    n = _check_n(n)
    s_plus, s_minus, _ = _sums(eps)
    if kind == "pf":
        coherence = np.abs(1 - 2 * p) ** (3 * n)
    elif kind == "dp":
        coherence = (1 - p) ** (3 * n)
    elif kind == "adc":
        coherence = (1 - p) ** n
    else:
        raise ValueError(f"no n-fold closed form for channel kind {kind!r}")
    return _out((1 + coherence) * s_plus + (1 - coherence) * s_minus)


def _triside_factor(kind, p, q, gamma):
    p = _check_p(p, "p")
    q = _check_p(q, "q")
    gamma = _check_p(gamma, "gamma")
    if kind == "pf":
        return (1 - 2 * p) * (1 - 2 * q) * (1 - 2 * gamma)
    if kind == "dp":
        return (1 - p) * (1 - q) * (1 - gamma)
    raise ValueError(f"no tri-side closed form for channel kind {kind!r}")


def ghz_triside_closed_form(p, q, gamma, n: int = 1, eps=DEFAULT_EPS, kind: str = "pf"):
    """GHZ under independent local channels of one kind with strengths p, q, gamma, n times."""
    n = _check_n(n)
    s_plus, s_minus, _ = _sums(eps)
    t = np.abs(_triside_factor(kind, p, q, gamma)) ** n
    return _out((1 + t) * s_plus + (1 - t) * s_minus)


def ghz_triside_pf_closed_form(p, q, gamma, n: int = 1, eps=DEFAULT_EPS):
    return ghz_triside_closed_form(p, q, gamma, n, eps, kind="pf")


def _radical_capacity(a, coherence_sq, eps):
    """``(c1+c3+R) S+ + (c1+c3-R) S-`` with ``R^2 = (c1-c3)^2 + 4 c2^2 * coherence_sq``."""
    c1, c2, c3 = ghz_like_coefficients(a)
    s_plus, s_minus, _ = _sums(eps)
    r = np.sqrt((c1 - c3) ** 2 + 4 * c2**2 * coherence_sq)
    return (c1 + c3 + r) * s_plus + (c1 + c3 - r) * s_minus


def ghzlike_adc_eigenvalues(a: float, p, n: int = 1):
    """Nonzero-candidate eigenvalues ``(lam5, lam6, lam7)`` after ``n`` first-qubit damping passes.

    ``lam5`` is the population moved to ``|011>``; ``lam6 <= lam7`` come from
    the ``{|000>, |111>}`` block.
    """
    a = _check_a(a)
    p = _check_p(p)
    n = _check_n(n)
    c1, c2, c3 = ghz_like_coefficients(a)
    u = (1 - p) ** n
    lam5 = c3 * (1 - u)
    root = np.sqrt((c1 - c3 * u) ** 2 + 4 * c2**2 * u)
    lam6 = (c1 + c3 * u - root) / 2
    lam7 = (c1 + c3 * u + root) / 2
    return _out(lam5), _out(lam6), _out(lam7)


def ghzlike_block_eigenvalues(a: float, coherence):
    """``(lam6, lam7)`` of the corner-form state with ``c2' = c2 * coherence``."""
    a = _check_a(a)
    c1, c2, c3 = ghz_like_coefficients(a)
    coherence = np.asarray(coherence, dtype=float)
    root = np.sqrt((c1 - c3) ** 2 + 4 * c2**2 * coherence**2)
    return _out((c1 + c3 - root) / 2), _out((c1 + c3 + root) / 2)


def adc_crossing(a: float, n: int = 1, tol: float = 1e-12):
    """Strength where ``lam5`` meets ``lam7``; ``None`` if they do not cross in (0, 1)."""
    a = _check_a(a)
    n = _check_n(n)

    def gap(p):
        lam5, _, lam7 = ghzlike_adc_eigenvalues(a, p, n)
        return lam5 - lam7

    lo, hi = gap(0.0), gap(1.0)
    if not (lo < 0.0 < hi):
        return None
    return optimize.bisect(gap, 0.0, 1.0, xtol=tol)


def ghzlike_adc_branches(a: float, p, n: int = 1, eps=DEFAULT_EPS):
    """Both branch expressions ``(before, after)`` of the damped GHZ-like capacity."""
    s_plus, s_minus, _ = _sums(eps)
    lam5, _, lam7 = ghzlike_adc_eigenvalues(a, p, n)
    before = 2 * np.asarray(lam7) * s_plus + 2 * np.asarray(lam5) * s_minus
    after = 2 * np.asarray(lam5) * s_plus + 2 * np.asarray(lam7) * s_minus
    return _out(before), _out(after)


def ghzlike_closed_form(kind: str, a: float, p, n: int = 1, eps=DEFAULT_EPS):
    """Capacity of a GHZ-like state after ``n`` passes.

    ``pf`` and ``dp`` act on all three qubits; ``adc`` acts on the first
    qubit and switches branch at the eigenvalue crossing.
    """
    a = _check_a(a)
    p = _check_p(p)
    n = _check_n(n)
    if kind == "pf":
        return _out(_radical_capacity(a, (1 - 2 * p) ** (6 * n), eps))
    if kind == "dp":
        return _out(_radical_capacity(a, (1 - p) ** (6 * n), eps))
    if kind != "adc":
        raise ValueError(f"no GHZ-like closed form for channel kind {kind!r}")
    before, after = ghzlike_adc_branches(a, p, n, eps)
    x = adc_crossing(a, n)
    if x is None:
        return before
    return _out(np.where(p <= x, before, after))


def ghzlike_triside_closed_form(a: float, p, q, gamma, n: int = 1, eps=DEFAULT_EPS,
                                kind: str = "pf"):
    """GHZ-like state under independent local channels with strengths p, q, gamma, n times."""
    a = _check_a(a)
    n = _check_n(n)
    t = _triside_factor(kind, p, q, gamma)
    return _out(_radical_capacity(a, t ** (2 * n), eps))


def ghzlike_triside_pf_closed_form(a: float, p, q, gamma, n: int = 1, eps=DEFAULT_EPS):
    return ghzlike_triside_closed_form(a, p, q, gamma, n, eps, kind="pf")


def scenario_closed_form(scenario, eps=DEFAULT_EPS, p=None, q=None):
    """Closed-form capacity for a scenario, or ``None`` if none is known.

    ``p`` and ``q`` override the scenario's strengths and may be arrays, so
    a whole grid is evaluated in one call.
    """
    s = scenario
    p = s.p if p is None else p
    q = s.q if q is None else q
    a, b, c = (float(e) for e in eps)
    if not 0.0 <= c <= b <= a:
        return None
    ghz = s.state.kind == "ghz"

    if s.topology == "tri":
        if s.kind not in ("pf", "dp"):
            return None
        if ghz:
            return ghz_triside_closed_form(p, q, s.gamma, s.n, eps, kind=s.kind)
        return ghzlike_triside_closed_form(s.state.a, p, q, s.gamma, s.n, eps, kind=s.kind)

    if s.topology == "first":
        if s.kind != "adc":
            return None
        if ghz:
            if s.n == 1:
                return ghz_closed_form("adc", p, eps)
            return ghz_n_fold_closed_form("adc", p, s.n, eps)
        return ghzlike_closed_form("adc", s.state.a, p, s.n, eps)

    # all three qubits
    if ghz:
        if s.n == 1 and s.kind != "adc":
            if s.kind in ("bf", "bpf") and a < b + c:
                return None
            return ghz_closed_form(s.kind, p, eps)
        if s.kind in ("pf", "dp"):
            return ghz_n_fold_closed_form(s.kind, p, s.n, eps)
        return None
    if s.kind in ("pf", "dp"):
        return ghzlike_closed_form(s.kind, s.state.a, p, s.n, eps)
    return None


def max_capacity(eps=DEFAULT_EPS) -> float:
    """Capacity of any pure state: ``2 (epsA + epsB + epsC)``."""
    return 2 * math.fsum(abs(float(e)) for e in eps)
