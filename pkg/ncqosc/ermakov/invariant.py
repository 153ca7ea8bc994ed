import numpy as np

from ncqosc.errors import SingularDenominator
from ncqosc.ermakov.families import EPFamily
from ncqosc.ermakov.integrate import EPSolutionNumeric, fd_step


def _state(ep, t):
    if isinstance(ep, EPSolutionNumeric):
        return ep.a(t), ep.rho_at(t), ep.rho_dot_at(t)
    if isinstance(ep, EPFamily):
        return ep.a(t), ep.rho(t), ep.rho_dot(t)
    raise TypeError(
        "ep must be an analytic EP family or an EPSolutionNumeric, "
        f"got {type(ep).__name__}"
    )


def invariant_coefficients(ep, t):
    """
    Coefficients of the quadratic Lewis invariant
    ``alpha (p1^2 + p2^2) + beta (x1^2 + x2^2) + gamma (x1 p1 + p2 x2)``.

    Parameters
    ----------
    ep : EPFamily or EPSolutionNumeric
        Source of ``a(t)``, ``rho(t)`` and ``rho'(t)``.
    t : float or array_like
        Sample time(s).

    Returns
    -------
    tuple of float or numpy.ndarray
        ``(alpha, beta, gamma)`` with ``alpha = rho^2``,
        ``gamma = -2 rho rho' / a`` and
        ``beta = (rho'^2 / a + xi2 a / rho^2) / a``.

    Raises
    ------
    SingularDenominator
        If ``a(t)`` vanishes.

    Examples
    --------
    >>> from ncqosc.ermakov.families import ExponentialFamily
    >>> invariant_coefficients(ExponentialFamily(1.0, 1.0, 0.0, 1.0), 0.0)
    (1.0, 1.0, 0.0)
    """
    a, rho, rho_dot = _state(ep, t)
    if np.any(a == 0):
        raise SingularDenominator("a(t)", None if np.ndim(t) else float(t))
    alpha = rho ** 2
    gamma = -2.0 * rho * rho_dot / a
    beta = (rho_dot ** 2 / a + ep.xi2 * a / rho ** 2) / a
    if np.ndim(alpha) == 0:
        return float(alpha), float(beta), float(gamma) + 0.0
    return alpha, beta, gamma


def invariant_ode_residuals(ep, a=None, b=None, t=0.0, h=None):
    """
    Relative residuals of the invariant coefficient system

    ``alpha' = -a gamma``, ``beta' = b gamma``,
    ``gamma' = 2 (b alpha - beta a)``.

    Derivatives are centered finite differences with step
    ``h = 1e-6 * max(1, |t|)`` unless ``h`` is given. Each residual is
    divided by the sum of the absolute values of its terms (a vanishing
    scale gives a zero residual).

    Parameters
    ----------
    ep : EPFamily or EPSolutionNumeric
    a, b : callable, optional
        Coefficient functions; default to ``ep.a`` and ``ep.b``.
    t : float or array_like
    h : float, optional

    Returns
    -------
    tuple
        ``(r1, r2, r3)``.
    """
    a = ep.a if a is None else a
    b = ep.b if b is None else b
    t = np.asarray(t, dtype=float)
    h = fd_step(t) if h is None else h

    al_p, be_p, ga_p = invariant_coefficients(ep, t + h)
    al_m, be_m, ga_m = invariant_coefficients(ep, t - h)
    alpha, beta, gamma = invariant_coefficients(ep, t)
    a_t, b_t = np.asarray(a(t), dtype=float), np.asarray(b(t), dtype=float)

    d_alpha = (np.asarray(al_p) - al_m) / (2 * h)
    d_beta = (np.asarray(be_p) - be_m) / (2 * h)
    d_gamma = (np.asarray(ga_p) - ga_m) / (2 * h)

    def relative(raw, scale):
        return np.where(scale > 0, np.abs(raw) / np.where(scale > 0, scale, 1.0), 0.0)

    r1 = relative(d_alpha + a_t * gamma, np.abs(d_alpha) + np.abs(a_t * gamma))
    r2 = relative(d_beta - b_t * gamma, np.abs(d_beta) + np.abs(b_t * gamma))
    r3 = relative(d_gamma - 2 * (b_t * alpha - beta * a_t),
                  np.abs(d_gamma) + 2 * np.abs(b_t * alpha) + 2 * np.abs(beta * a_t))
    if np.ndim(r1) == 0:
        return float(r1), float(r2), float(r3)
    return r1, r2, r3
