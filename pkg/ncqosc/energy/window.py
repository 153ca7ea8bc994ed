"""
Reality windows of the catalog cases.

A window is the time interval on which the theta discriminant and the
Omega radicand of a case are both nonnegative. The bounds come from the
reduced closed forms and can be certified by root finding on the radicands
evaluated through the generic solver expressions.
"""
import logging
from dataclasses import dataclass
from math import inf, isfinite, log, sqrt
from typing import NamedTuple, Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from ncqosc.errors import NcqoscError
from ncqosc.model.catalog import build_scenario, impose_case_rates
from ncqosc.model.params import Case, CaseId, Family, ScenarioParams
from ncqosc.ncparams.closed_forms import case_constants
from ncqosc.ncparams.ncparams import omega_radicand, theta_discriminant

logger = logging.getLogger(__name__)

THETA_RADICAND = "theta discriminant"
OMEGA_RADICAND = "M b f - M^2 omega^2"
POSITIVE_OFFSET = "Gamma t + chi > 0"

CERTIFY_RTOL = 1e-9


@dataclass(frozen=True)
class RealityWindow:
    """
    Closed time interval ``[lower, upper]`` on which a case stays real.

    Attributes
    ----------
    lower, upper : float
        Bounds, ``-inf``/``+inf`` when inactive. ``lower > upper`` encodes
        an empty window (a constant radicand is negative).
    source : str
        Which radicand binds, ``"unbounded"`` when neither bound is active.
    lower_radicand, upper_radicand : str or None
        Radicand whose root gives the respective bound.
    lower_open : bool
        True when ``lower`` itself is excluded (a profile is singular there).
    """

    lower: float = -inf
    upper: float = inf
    source: str = "unbounded"
    lower_radicand: Optional[str] = None
    upper_radicand: Optional[str] = None
    lower_open: bool = False

    @property
    def empty(self) -> bool:
        return self.lower > self.upper

    def contains(self, t):
        t = np.asarray(t, dtype=float)
        above = t > self.lower if self.lower_open else t >= self.lower
        inside = above & (t <= self.upper)
        return bool(inside) if inside.ndim == 0 else inside

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "source": self.source,
                "lower_radicand": self.lower_radicand, "upper_radicand": self.upper_radicand,
                "lower_open": self.lower_open}


def _empty(reason: str) -> RealityWindow:
    return RealityWindow(inf, -inf, f"empty: {reason} < 0")


def _window(lower=-inf, upper=inf, lower_radicand=None, upper_radicand=None,
            lower_open=False) -> RealityWindow:
    names = [name for name in (lower_radicand, upper_radicand) if name is not None]
    source = " / ".join(dict.fromkeys(names)) if names else "unbounded"
    return RealityWindow(lower, upper, source, lower_radicand, upper_radicand, lower_open)


def _set_i_window(case: Case, p: ScenarioParams, k: dict) -> RealityWindow:
    K, W, P2, G = k["K"], k["W"], k["P2"], p.Gamma
    if case is Case.IV:
        if G == 0:
            if K + W < 0:
                return _empty("K + W")
            return _window() if P2 >= 0 else _empty(OMEGA_RADICAND)
        candidates = [(log(p.M * p.omega0 ** 2 / p.Delta_c) / G, OMEGA_RADICAND)]
        if W < 0:
            if K == 0:
                return _empty(THETA_RADICAND)
            candidates.append((log(-W / K) / G, THETA_RADICAND))
        lower, radicand = max(candidates)
        return _window(lower=lower, lower_radicand=radicand)

    if P2 < 0:
        return _empty(OMEGA_RADICAND)
    if case is Case.II or G == 0 or W >= 0:
        return _window() if K + W >= 0 else _empty(THETA_RADICAND)
    if K == 0:
        return _empty(THETA_RADICAND)
    rate = 2 * G if case is Case.I else 4 * G
    return _window(upper=log(K / -W) / rate, upper_radicand=THETA_RADICAND)


def _set_ii_window(case: Case, p: ScenarioParams, k: dict) -> RealityWindow:
    M, w0, G, chi = p.M, p.omega0, p.Gamma, p.chi
    if case is Case.II:
        if k["K"] + k["W"] < 0:
            return _empty(THETA_RADICAND)
        if k["P2"] < 0:
            return _empty(OMEGA_RADICAND)
        if G == 0:
            return _window()
        return _window(lower=-chi / G, lower_radicand=POSITIVE_OFFSET, lower_open=True)

    s_min = w0 * sqrt(M / p.Delta_c)
    s_max = sqrt(k["g"] ** 2 * p.sigma / (M * w0 ** 2) + 4 * p.sigma * M)
    if G == 0:
        if chi < s_min:
            return _empty(OMEGA_RADICAND)
        return _window() if chi <= s_max else _empty(THETA_RADICAND)
    return _window((s_min - chi) / G, (s_max - chi) / G, OMEGA_RADICAND, THETA_RADICAND)


def reality_window(case, params: ScenarioParams) -> RealityWindow:
    """
    Reality window of a catalog case.

    Parameters
    ----------
    case : CaseId or str
    params : ScenarioParams

    Returns
    -------
    RealityWindow

    Examples
    --------
    >>> p = ScenarioParams(M=1, q=1, omega0=1e3, B0=1e2, Gamma=1,
    ...                    sigma=1e7, Delta_c=1e7)
    >>> reality_window("set1-case1", p).upper
    inf
    >>> p = ScenarioParams(M=1, q=1, omega0=1, B0=4, Gamma=1, sigma=0.5, Delta_c=2)
    >>> round(reality_window("set1-case1", p).upper, 12)
    0.69314718056
    """
    case = CaseId.parse(case)
    p = impose_case_rates(case, params)
    k = case_constants(p)
    if case.family is Family.SET_I:
        return _set_i_window(case.case, p, k)
    return _set_ii_window(case.case, p, k)


class CertifiedBound(NamedTuple):
    side: str
    radicand: str
    analytic: float
    root: float
    deviation: float
    agrees: bool


def _radicand_function(case: CaseId, params: ScenarioParams, radicand: str):
    scenario = build_scenario(case, params)
    p = scenario.params
    if radicand == THETA_RADICAND:
        return lambda t: theta_discriminant(p, scenario.f, scenario.omega, scenario.B,
                                            scenario.ep.a, t)
    return lambda t: omega_radicand(p, scenario.f, scenario.omega, scenario.B, scenario.ep.b, t)


def _bracket(fn, center: float, scale: float, attempts: int = 40):
    for i in range(attempts):
        step = 1e-6 * scale * 2.0 ** i
        lo, hi = center - step, center + step
        try:
            f_lo, f_hi = fn(lo), fn(hi)
        except NcqoscError:
            return None
        if f_lo * f_hi <= 0:
            return lo, hi
    return None


def certify_window(case, params: ScenarioParams,
                   window: Optional[RealityWindow] = None) -> Tuple[CertifiedBound, ...]:
    """
    Certify the finite bounds of a window by root finding.

    Each finite bound bound by a radicand is bracketed on the radicand
    evaluated through the generic solver expressions and refined with
    :func:`scipy.optimize.brentq`. A bound agrees when the root lies within
    ``1e-9 * max(1, |bound|)`` of the analytic value.

    Returns
    -------
    tuple of CertifiedBound
        One entry per certifiable bound; disagreements are logged.
    """
    case = CaseId.parse(case)
    window = reality_window(case, params) if window is None else window
    results = []
    for side, bound, radicand in (("lower", window.lower, window.lower_radicand),
                                  ("upper", window.upper, window.upper_radicand)):
        if not isfinite(bound) or radicand not in (THETA_RADICAND, OMEGA_RADICAND):
            continue
        scale = max(1.0, abs(bound))
        fn = _radicand_function(case, params, radicand)
        bracket = _bracket(fn, bound, scale)
        if bracket is None:
            logger.warning("%s %s bound %.17g: no sign change of %s nearby",
                           case, side, bound, radicand)
            results.append(CertifiedBound(side, radicand, bound, float("nan"), inf, False))
            continue
        root = brentq(fn, *bracket, xtol=1e-14 * scale)
        deviation = abs(root - bound) / scale
        agrees = deviation <= CERTIFY_RTOL
        if not agrees:
            logger.warning("%s %s bound %.17g disagrees with the root %.17g of %s",
                           case, side, bound, root, radicand)
        results.append(CertifiedBound(side, radicand, bound, root, deviation, agrees))
    return tuple(results)
