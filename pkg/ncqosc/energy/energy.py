"""
Energy expectation values in the eigenstates of the Hamiltonian.

For quantum numbers ``n, m`` (hbar = 1)::

    E = (n + m + 1) / 2 [b rho**2 + a / rho**2 + rho'**2 / a] + (n - m) c

The per-case series evaluate the reduced ground-tower (``m = 0``) forms.
"""
import logging
from dataclasses import dataclass
from typing import Iterable

import mpmath
import numpy as np
import pandas as pd

from ncqosc.errors import NegativeRadicand, NotApplicableCase, OutsideRealityWindow
from ncqosc.model.catalog import build_scenario
from ncqosc.model.params import Case, CaseId, Family, ScenarioParams
from ncqosc.ncparams.closed_forms import printed_c
from ncqosc.ncparams.ncparams import nc_pair
from ncqosc.energy.window import RealityWindow, reality_window

logger = logging.getLogger(__name__)

SPOT_CHECK_DPS = 50


def _scalar(value):
    return float(value) if np.ndim(value) == 0 else value


def _require_inside(window: RealityWindow, t) -> None:
    inside = np.atleast_1d(window.contains(t))
    if not np.all(inside):
        bad = np.atleast_1d(np.asarray(t, dtype=float))[~inside][0]
        raise OutsideRealityWindow(window, float(bad))


@dataclass(frozen=True)
class EnergySeries:
    """
    Energy expectation sampled on a time grid.

    Attributes
    ----------
    grid : numpy.ndarray
    value : numpy.ndarray
        Energies in natural units.
    case : CaseId
    n, m : int
    window : RealityWindow
    omega0 : float
        Reference frequency used by :attr:`scaled`.
    """

    grid: np.ndarray
    value: np.ndarray
    case: CaseId
    n: int
    m: int
    window: RealityWindow
    omega0: float

    def __post_init__(self):
        _require_inside(self.window, self.grid)

    @property
    def scaled(self) -> np.ndarray:
        """Energies in units of ``omega0``."""
        return self.value / self.omega0

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"t": self.grid, "energy": self.value,
                             "energy_over_omega0": self.scaled})


def energy_general(n: int, m: int, case, params: ScenarioParams, t):
    """
    Energy expectation ``<E_{n,m-n}>(t)`` from the general formula.

    Parameters
    ----------
    n, m : int
    case : CaseId or str
    params : ScenarioParams
    t : float or numpy.ndarray

    Returns
    -------
    float or numpy.ndarray

    Raises
    ------
    OutsideRealityWindow
        If some ``t`` lies outside the case's reality window.

    Examples
    --------
    >>> p = ScenarioParams(M=1, q=1, omega0=1e3, B0=1e2, Gamma=1,
    ...                    sigma=1e7, Delta_c=1e7)
    >>> round(energy_general(0, 0, "set1-case1", p, 2.0) / 1e7, 9)
    1.0
    """
    case = CaseId.parse(case)
    window = reality_window(case, params)
    _require_inside(window, t)
    ep = build_scenario(case, params).ep
    a, rho, rho_dot = ep.a(t), ep.rho(t), ep.rho_dot(t)
    bracket = ep.b(t) * rho ** 2 + a / rho ** 2 + rho_dot ** 2 / a
    value = 0.5 * (n + m + 1) * bracket
    if n != m:
        value = value + (n - m) * nc_pair(case, params).c(t)
    return _scalar(value)


def energy_case_series(case, params: ScenarioParams, n: int, grid,
                       dominant_balance: bool = False) -> EnergySeries:
    """
    Ground-tower (``m = 0``) energy series from the reduced per-case forms.

    Set-I cases give ``(n+1) mu**2 Delta + n c(t)``; Set-II Case I gives
    ``(n+1)/(2s) [2(sigma/mu**2 + Delta mu**2) + mu**2 Gamma**2 / (8 sigma)] + n c(t)``
    and Set-II Case II ``(n+1) mu**2 Delta / s + n c(t)`` with
    ``s = Gamma t + chi``.

    Parameters
    ----------
    case : CaseId or str
    params : ScenarioParams
    n : int
    grid : array_like
    dominant_balance : bool, optional
        Evaluate the Set-II Case I cross term with the field-dominated
        rearrangement.

    Raises
    ------
    NotApplicableCase
        If ``xi2 != 1``; the reduced forms fix it to one.
    OutsideRealityWindow
        If the grid leaves the reality window.
    """
    case = CaseId.parse(case)
    scenario = build_scenario(case, params)
    p = scenario.params
    if p.xi2 != 1.0:
        raise NotApplicableCase(f"the reduced energy of {case} assumes xi2 = 1, got {p.xi2}")
    grid = np.atleast_1d(np.asarray(grid, dtype=float))
    window = reality_window(case, p)
    _require_inside(window, grid)

    mu, Delta, sigma, G = p.mu, p.Delta_c, p.sigma, p.Gamma
    if case.family is Family.SET_I:
        base = np.full_like(grid, (n + 1) * mu ** 2 * Delta)
    else:
        s = G * grid + p.chi
        if case.case is Case.I:
            base = (n + 1) / (2 * s) * (2 * (sigma / mu ** 2 + Delta * mu ** 2)
                                        + mu ** 2 * G ** 2 / (8 * sigma))
        else:
            base = (n + 1) * mu ** 2 * Delta / s
    value = base
    if n != 0:
        value = base + n * np.asarray(printed_c(case, p, grid, dominant_balance=dominant_balance))
    return EnergySeries(grid, value, case, n, 0, window, p.omega0)


def energy_asymptote(case, params: ScenarioParams, n: int) -> float:
    """
    Large-time limit of the ground-tower energy.

    Set-I Cases I and III tend to
    ``(n+1) mu**2 Delta + n (omega0 sqrt(M sigma - 1) + sqrt(Delta/M - omega0**2))``,
    the value of the field-free case; Set-I Case II is constant and the
    Set-II energies vanish.

    Raises
    ------
    NotApplicableCase
        For Set-I Case IV.
    NegativeRadicand
        If ``M sigma < 1`` or ``Delta < M omega0**2``.
    """
    case = CaseId.parse(case)
    if case.family is Family.SET_II:
        return 0.0
    if case.case is Case.IV:
        raise NotApplicableCase("no large-time limit is tabulated for set1-case4")
    p = build_scenario(case, params).params
    if case.case is Case.II:
        return float(energy_case_series(case, p, n, [0.0]).value[0])
    for name, radicand in (("M sigma - 1", p.M * p.sigma - 1.0),
                           ("Delta/M - omega0^2", p.Delta_c / p.M - p.omega0 ** 2)):
        if radicand < 0:
            raise NegativeRadicand(float("inf"), radicand, name)
    return ((n + 1) * p.mu ** 2 * p.Delta_c
            + n * (p.omega0 * np.sqrt(p.M * p.sigma - 1.0) + np.sqrt(p.Delta_c / p.M - p.omega0 ** 2)))


def charge_asymmetry(case, params: ScenarioParams, t):
    """
    Energies at charge ``+q`` and ``-q`` with everything else fixed.

    Returns
    -------
    tuple
        ``(E_plus, E_minus)`` for the quantum numbers ``params.n, params.m``.
    """
    n, m = params.n, params.m
    e_plus = energy_general(n, m, case, params, t)
    e_minus = energy_general(n, m, case, params.replace(q=-params.q), t)
    if params.B0 != 0 and params.q != 0 and n != m and np.any(np.equal(e_plus, e_minus)):
        logger.warning("%s: energies are charge-symmetric although B0 != 0 and n != m", case)
    return e_plus, e_minus


def _literal_set_ii_case_i(p: ScenarioParams, n: int, t: float):
    M, g, w0 = mpmath.mpf(p.M), mpmath.mpf(p.q) * mpmath.mpf(p.B0), mpmath.mpf(p.omega0)
    sigma, Delta, G, mu = (mpmath.mpf(p.sigma), mpmath.mpf(p.Delta_c),
                           mpmath.mpf(p.Gamma), mpmath.mpf(p.mu))
    s = G * mpmath.mpf(t) + mpmath.mpf(p.chi)
    radicands = {
        "M Delta s^2 - M^2 omega0^2": M * Delta * s ** 2 - M ** 2 * w0 ** 2,
        "g^2 sigma/M + 4 M sigma omega0^2 - omega0^2 s^2":
            g ** 2 * sigma / M + 4 * M * sigma * w0 ** 2 - w0 ** 2 * s ** 2,
    }
    for name, value in radicands.items():
        if value < 0:
            raise NegativeRadicand(float(t), float(value), name)
    Q, R2 = (mpmath.sqrt(value) for value in radicands.values())
    num = ((4 * M ** 2 * w0 ** 2 / s ** 2 + 2 * g * Q / s ** 2) * R2
           - 2 * g * M * w0 ** 2 / s - g ** 2 * Q / (M * s))
    c = num / (4 * M ** 2 * w0 ** 2 + g ** 2) + mpmath.sqrt(Delta / M - w0 ** 2 / s ** 2)
    base = (n + 1) / (2 * s) * (2 * (sigma / mu ** 2 + Delta * mu ** 2) + mu ** 2 * G ** 2 / (8 * sigma))
    return base + n * c


def dominant_balance_spot_check(params: ScenarioParams, times: Iterable[float],
                                n=None, dps: int = SPOT_CHECK_DPS) -> float:
    """
    Worst relative deviation of the dominant-balance Set-II Case I energy
    from the literal reduced form evaluated with ``dps`` significant digits.

    Examples
    --------
    >>> p = ScenarioParams(M=1, q=1, omega0=1e3, B0=1e20, Gamma=1,
    ...                    sigma=1e7, Delta_c=1e7, mu=1)
    >>> dominant_balance_spot_check(p, [0.0, 2.5, 5.0]) < 1e-12
    True
    """
    case = CaseId(Family.SET_II, Case.I)
    p = build_scenario(case, params).params
    n = p.n if n is None else n
    times = [float(t) for t in times]
    fast = energy_case_series(case, p, n, times, dominant_balance=True).value
    worst = 0.0
    with mpmath.workdps(dps):
        for t, value in zip(times, fast):
            exact = _literal_set_ii_case_i(p, n, t)
            worst = max(worst, float(abs((mpmath.mpf(float(value)) - exact) / exact)))
    logger.info("dominant-balance spot check over %d times: worst relative deviation %.3e",
                len(times), worst)
    return worst
