import logging
from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.integrate import solve_ivp

from ncqosc.errors import BlowUp
from ncqosc.ermakov.families import ep_residual, ep_residual_terms

logger = logging.getLogger(__name__)

DEFAULT_RTOL = 1e-10
DEFAULT_RESIDUAL_TOL = 1e-6


def fd_step(t):
    """Centered finite-difference step ``1e-6 * max(1, |t|)``."""
    return 1e-6 * np.maximum(1.0, np.abs(t))


@dataclass(frozen=True)
class EPSolutionNumeric:
    """
    Numerical EP trajectory sampled on a time grid.

    Attributes
    ----------
    grid : numpy.ndarray
        Strictly increasing sample times.
    rho, rho_dot : numpy.ndarray
        Scale function and its derivative at the grid.
    xi2 : float
        Integration constant.
    residual : numpy.ndarray
        Relative EP residual at the grid, ``nan`` at the two end nodes.
    residual_tol : float
        Certification threshold for ``residual``.
    """

    grid: np.ndarray
    rho: np.ndarray
    rho_dot: np.ndarray
    xi2: float
    residual: np.ndarray
    residual_tol: float
    a_fn: Callable = field(repr=False, compare=False)
    a_dot_fn: Callable = field(repr=False, compare=False)
    b_fn: Callable = field(repr=False, compare=False)
    dense: Callable = field(repr=False, compare=False)

    @property
    def max_residual(self) -> float:
        interior = self.residual[np.isfinite(self.residual)]
        return float(np.max(interior)) if interior.size else 0.0

    @property
    def certified(self) -> bool:
        return self.max_residual <= self.residual_tol

    # Same call signatures as the analytic families.
    def a(self, t):
        return np.asarray(self.a_fn(t), dtype=float)

    def b(self, t):
        return np.asarray(self.b_fn(t), dtype=float)

    def rho_at(self, t):
        return self.dense(t)[0]

    def rho_dot_at(self, t):
        return self.dense(t)[1]


def ep_integrate(
        a: Tuple[Callable, Callable],
        b: Callable,
        rho0: float,
        rho_dot0: float,
        xi2: float,
        grid,
        rtol: float = DEFAULT_RTOL,
        atol: Optional[float] = None,
        residual_tol: float = DEFAULT_RESIDUAL_TOL,
        ) -> EPSolutionNumeric:
    """
    Integrate the dissipative Ermakov-Pinney equation numerically.

    Parameters
    ----------
    a : tuple of callable
        ``(a, a_dot)``: the coefficient ``a(t)`` and its derivative.
    b : callable
        The coefficient ``b(t)``.
    rho0, rho_dot0 : float
        Initial data at ``grid[0]``; ``rho0`` must be positive.
    xi2 : float
        Integration constant.
    grid : array_like
        Strictly increasing output times.
    rtol, atol : float, optional
        Local error tolerances of the DOP853 stepper. ``atol`` defaults to
        ``rtol * 1e-2``.
    residual_tol : float, optional
        Threshold reported through :attr:`EPSolutionNumeric.certified`.

    Returns
    -------
    EPSolutionNumeric

    Raises
    ------
    ValueError
        If ``rho0 <= 0`` or the grid is not strictly increasing.
    BlowUp
        If rho reaches zero or the stepper fails; carries the last valid time.

    Notes
    -----
    The residual at interior nodes uses a centered finite difference of the
    dense-output ``rho_dot`` for ``rho''`` with step ``1e-6 * max(1, |t|)``,
    scaled by the sum of the absolute EP terms.

    Examples
    --------
    >>> import numpy as np
    >>> sol = ep_integrate((lambda t: 1.0, lambda t: 0.0), lambda t: 1.0,
    ...                    1.0, 0.0, 1.0, np.linspace(0, 1, 5))
    >>> bool(np.allclose(sol.rho, 1.0))
    True
    """
    a_fn, a_dot_fn = a
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2 or np.any(np.diff(grid) <= 0):
        raise ValueError("grid must be a strictly increasing sequence of at least two times")
    if not rho0 > 0:
        raise ValueError(f"rho0 must be > 0, got {rho0!r}")
    if atol is None:
        atol = rtol * 1e-2

    def rhs(t, y):
        rho, rho_dot = y
        a_t = float(a_fn(t))
        return [rho_dot,
                float(a_dot_fn(t)) / a_t * rho_dot - a_t * float(b(t)) * rho
                + xi2 * a_t ** 2 / rho ** 3]

    def hits_zero(t, y):
        return y[0]
    hits_zero.terminal = True
    hits_zero.direction = -1

    sol = solve_ivp(rhs, (grid[0], grid[-1]), [rho0, rho_dot0], method="DOP853",
                    t_eval=grid, dense_output=True, events=hits_zero,
                    rtol=rtol, atol=atol)
    if sol.status == 1:
        last = float(sol.t[-1]) if sol.t.size else float(grid[0])
        raise BlowUp(last, f"rho reached zero at t = {sol.t_events[0][0]!r}")
    if sol.status != 0:
        last = float(sol.t[-1]) if sol.t.size else float(grid[0])
        raise BlowUp(last, f"integrator failed: {sol.message}")

    rho, rho_dot = sol.y
    residual = np.full(grid.shape, np.nan)
    for i in range(1, grid.size - 1):
        t = grid[i]
        h = fd_step(t)
        rho_ddot = (sol.sol(t + h)[1] - sol.sol(t - h)[1]) / (2 * h)
        a_t, a_dot_t, b_t = float(a_fn(t)), float(a_dot_fn(t)), float(b(t))
        raw = ep_residual(a_t, a_dot_t, b_t, rho[i], rho_dot[i], rho_ddot, xi2)
        scale = ep_residual_terms(a_t, a_dot_t, b_t, rho[i], rho_dot[i], rho_ddot, xi2)
        residual[i] = abs(raw) / scale if scale > 0 else abs(raw)

    solution = EPSolutionNumeric(grid, rho, rho_dot, xi2, residual, residual_tol,
                                 a_fn, a_dot_fn, b, sol.sol)
    logger.debug("EP integration on [%g, %g]: %d steps, max residual %.3e",
                 grid[0], grid[-1], sol.t.size, solution.max_residual)
    return solution


def ep_integrate_family(family, grid, **kwargs) -> EPSolutionNumeric:
    """Integrate from the initial data of an analytic family at ``grid[0]``."""
    t0 = float(np.asarray(grid, dtype=float)[0])
    return ep_integrate((family.a, family.a_dot), family.b,
                        float(family.rho(t0)), float(family.rho_dot(t0)),
                        family.xi2, grid, **kwargs)
