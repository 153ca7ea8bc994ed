"""
Lewis phase ``Theta_{n,l}(t) = (n + l) int_0^t (c - a / rho**2) dT``.
"""
import logging
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from ncqosc.errors import (
    DomainError, IntegrandSingular, NegativeRadicand, OutOfCatalog, SingularDenominator,
)
from ncqosc.model.catalog import build_scenario
from ncqosc.model.params import ScenarioParams
from ncqosc.ncparams.ncparams import nc_pair
from ncqosc.phase.closed_forms import phase_closed_form
from ncqosc.wavefunction.eigenfunction import PolarPoint, eigenfunction, spec_at

logger = logging.getLogger(__name__)

EPSREL = 1e-12
SCAN_POINTS = 64


def _abs_tol(t) -> float:
    return 1e-10 * (1.0 + abs(t))


@dataclass(frozen=True)
class PhaseSeries:
    """
    Phase sampled on a grid by quadrature and, where available, in closed form.
    """

    grid: np.ndarray
    theta_quad: np.ndarray
    theta_closed: Optional[np.ndarray]
    n: int
    l: int

    @property
    def max_deviation(self) -> Optional[float]:
        """Largest ``|quad - closed| / max(1, |quad|)``, or None without a closed form."""
        if self.theta_closed is None:
            return None
        scale = np.maximum(1.0, np.abs(self.theta_quad))
        return float(np.max(np.abs(self.theta_quad - self.theta_closed) / scale))

    def agrees(self, rtol: float = 1e-6) -> bool:
        deviation = self.max_deviation
        return deviation is None or deviation <= rtol


def phase_integrand(case, params: ScenarioParams):
    """Callable ``T -> c(T) - a(T) / rho(T)**2`` of a catalog case."""
    pair = nc_pair(case, params)
    ep = pair.scenario.ep

    def integrand(T):
        return pair.c(T) - ep.a(T) / ep.rho(T) ** 2

    return integrand


def _scan(integrand, t0: float, t1: float) -> None:
    times = np.linspace(t0, t1, SCAN_POINTS)
    try:
        values = np.asarray(integrand(times), dtype=float)
    except (NegativeRadicand, SingularDenominator) as err:
        raise IntegrandSingular(getattr(err, "t", None) or t0, str(err)) from err
    bad = ~np.isfinite(values)
    if np.any(bad):
        raise IntegrandSingular(float(times[bad][0]), "non-finite value")


def _integrate(integrand, t0: float, t1: float) -> float:
    if t1 == t0:
        return 0.0
    _scan(integrand, t0, t1)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", IntegrationWarning)
        try:
            value, error = quad(lambda T: float(integrand(T)), t0, t1,
                                epsabs=_abs_tol(t1), epsrel=EPSREL, limit=200)
        except (NegativeRadicand, SingularDenominator) as err:
            raise IntegrandSingular(getattr(err, "t", None) or t0, str(err)) from err
    for warning in caught:
        logger.warning("phase quadrature on [%g, %g]: %s", t0, t1, warning.message)
    logger.debug("phase quadrature on [%g, %g] = %.17g (error estimate %.3e)",
                 t0, t1, value, error)
    return value


def phase_quadrature(n: int, l: int, case, params: ScenarioParams, t: float) -> float:
    """
    Phase by adaptive Gauss-Kronrod quadrature.

    Parameters
    ----------
    n, l : int
        Quantum numbers with ``n + l >= 0``.
    case : CaseId or str
    params : ScenarioParams
    t : float

    Returns
    -------
    float
        Exactly 0 when ``n + l == 0`` or ``t == 0``.

    Raises
    ------
    IntegrandSingular
        If ``c - a / rho**2`` is not finite on ``[0, t]``.

    Examples
    --------
    >>> p = ScenarioParams(M=1, q=1, omega0=1e3, B0=1e2, Gamma=1,
    ...                    sigma=1e7, Delta_c=1e7)
    >>> phase_quadrature(0, 0, "set1-case1", p, 3.0)
    0.0
    """
    if n + l < 0:
        raise ValueError(f"n + l must be >= 0, got n={n}, l={l}")
    if n + l == 0:
        return 0.0
    return (n + l) * _integrate(phase_integrand(case, params), 0.0, float(t)) + 0.0


def phase_series(case, params: ScenarioParams, n: int, l: int, grid) -> PhaseSeries:
    """
    Phase on a grid; quadrature accumulates segment by segment from 0.

    The closed form is attached for the cases that have one and where it
    stays real; otherwise ``theta_closed`` is None.
    """
    grid = np.asarray(grid, dtype=float)
    theta_quad = np.zeros_like(grid)
    if n + l != 0:
        integrand = phase_integrand(case, params)
        total, previous = 0.0, 0.0
        for i, t in enumerate(grid):
            total += _integrate(integrand, previous, float(t))
            theta_quad[i] = (n + l) * total
            previous = float(t)
    try:
        theta_closed = np.asarray(phase_closed_form(case, n, l, params, grid), dtype=float)
    except (OutOfCatalog, DomainError) as err:
        logger.debug("%s: quadrature only (%s)", case, err)
        theta_closed = None
    return PhaseSeries(grid, theta_quad, theta_closed, n, l)


def eigenstate_assemble(n: int, m: int, case, params: ScenarioParams, t: float, r: float,
                        ang: float) -> complex:
    """
    Hamiltonian eigenstate ``exp(i Theta_{n,m-n}(t)) phi_{n,m-n}(r, ang)``.

    Examples
    --------
    >>> p = ScenarioParams(M=1, q=1, omega0=1e3, B0=1e2, Gamma=1,
    ...                    sigma=1e7, Delta_c=1e7)
    >>> psi = eigenstate_assemble(1, 0, "set1-case2", p, 0.0, 0.5, 1.0)
    >>> spec = spec_at(build_scenario("set1-case2", p).ep, 1, 0, 0.0)
    >>> bool(psi == eigenfunction(spec, PolarPoint(0.5, 1.0)))
    True
    """
    ep = build_scenario(case, params).ep
    spec = spec_at(ep, n, m, t, case)
    theta = phase_quadrature(n, m - n, case, params, t)
    return np.exp(1j * theta) * eigenfunction(spec, PolarPoint(r, ang))
