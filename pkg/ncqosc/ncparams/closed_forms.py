"""
Per-case closed forms of ``theta(t)``, ``Omega(t)`` and ``c(t)``.

These are transcriptions of the reduced expressions for every catalog case
and serve as an independent check of the quadratic solvers.
"""
import numpy as np

from ncqosc.errors import NegativeRadicand
from ncqosc.model.catalog import general_profiles, impose_case_rates
from ncqosc.model.params import Case, CaseId, Family, ScenarioParams


def _sqrt(value, t, name):
    value = np.asarray(value, dtype=float)
    if np.any(value < 0):
        idx = np.flatnonzero(np.atleast_1d(value < 0))[0]
        t_b = np.atleast_1d(np.broadcast_to(np.asarray(t, dtype=float), value.shape))
        raise NegativeRadicand(float(t_b[idx]), float(np.atleast_1d(value)[idx]), name)
    return np.sqrt(value)


def _out(value):
    return float(value) if np.ndim(value) == 0 else value


def case_constants(params: ScenarioParams):
    """
    Shorthands shared by the closed forms.

    Returns
    -------
    dict
        ``g = q B0``, ``K = g**2 sigma / (4M)``,
        ``W = omega0**2 (M sigma - 1)`` and
        ``P2 = M Delta - M**2 omega0**2`` (the square of ``P``).
    """
    M, g = params.M, params.q * params.B0
    return dict(
        M=M,
        g=g,
        K=g ** 2 * params.sigma / (4 * M),
        W=params.omega0 ** 2 * (M * params.sigma - 1.0),
        P2=M * params.Delta_c - M ** 2 * params.omega0 ** 2,
    )


def _set_i_x_and_w2(case: Case, params: ScenarioParams, t):
    """Field-damping product ``x = B f / B0`` and ``omega(t)**2`` for Set-I."""
    G = params.Gamma
    one = np.ones_like(t)
    if case is Case.I:
        return np.exp(-G * t), params.omega0 ** 2 * one
    if case is Case.II:
        return one, params.omega0 ** 2 * one
    if case is Case.III:
        return np.exp(-2 * G * t), params.omega0 ** 2 * one
    return one, params.omega0 ** 2 * np.exp(-G * t)


def general_exponential_nc(params: ScenarioParams, t):
    """
    ``(theta, Omega)`` for the general exponential profiles
    ``f = exp(-Gamma t)``, ``omega = omega0 exp(-delta t/2)``,
    ``B = B0 exp(Lambda t)`` against the Set-I family with rate ``vartheta``.

    Examples
    --------
    >>> p = ScenarioParams(M=1, q=1, omega0=1e3, B0=1e2, Gamma=1,
    ...                    sigma=1e7, Delta_c=1e7, Lambda=1.0)
    >>> theta, Omega = general_exponential_nc(p, 0.0)
    >>> theta > 0 and Omega > 0
    True
    """
    general_profiles(params)
    t = np.asarray(t, dtype=float)
    M, q, w0, B0 = params.M, params.q, params.omega0, params.B0
    G, dl, Lm, vt = params.Gamma, params.delta, params.Lambda, params.theta_rate
    sigma, Delta = params.sigma, params.Delta_c

    D = (q ** 2 * B0 ** 2 * sigma * np.exp((2 * Lm - G - vt) * t) / (4 * M)
         + w0 ** 2 * np.exp(-dl * t) * (M * sigma * np.exp((G - vt) * t) - 1.0))
    theta = (8 * M * (_sqrt(D, t, "theta discriminant") - q * B0 * np.exp((Lm - G) * t) / (2 * M))
             / (q ** 2 * B0 ** 2 * np.exp((2 * Lm - G) * t) + 4 * M ** 2 * w0 ** 2 * np.exp((G - dl) * t)))
    R = M * Delta * np.exp((vt - G) * t) - M ** 2 * w0 ** 2 * np.exp(-dl * t)
    Omega = -q * B0 * np.exp(Lm * t) + 2 * np.exp(G * t) * _sqrt(R, t, "M b f - M^2 omega^2")
    return _out(theta), _out(Omega)


def closed_form_nc(case, params: ScenarioParams, t):
    """
    Reduced ``(theta(t), Omega(t))`` of a catalog case.

    Parameters
    ----------
    case : CaseId or str
    params : ScenarioParams
    t : float or numpy.ndarray

    Returns
    -------
    tuple

    Raises
    ------
    NegativeRadicand
        If a radicand is negative at ``t``.
    """
    case = CaseId.parse(case)
    p = impose_case_rates(case, params)
    t = np.asarray(t, dtype=float)
    if case.family is Family.SET_I:
        return general_exponential_nc(p, t)

    k = case_constants(p)
    M, g, w0 = k["M"], k["g"], p.omega0
    s = p.Gamma * t + p.chi
    den = g ** 2 + 4 * M ** 2 * w0 ** 2
    if case.case is Case.I:
        R2 = _sqrt(g ** 2 * p.sigma / M + 4 * M * p.sigma * w0 ** 2 - w0 ** 2 * s ** 2, t,
                   "g^2 sigma/M + 4 M sigma omega0^2 - omega0^2 s^2")
        theta = 8 * M * (R2 - g * s / (2 * M)) / den
        Q = _sqrt(M * p.Delta_c * s ** 2 - M ** 2 * w0 ** 2, t, "M Delta s^2 - M^2 omega0^2")
        Omega = (2 * Q - g) / s
    else:
        root = _sqrt(k["K"] + k["W"], t, "K + W")
        theta = 8 * M * s / den * (root - g / (2 * M))
        Omega = (2 * _sqrt(k["P2"], t, "M Delta - M^2 omega0^2") - g) / s
    return _out(theta), _out(Omega)


def _printed_c_set_i(case: Case, p: ScenarioParams, t):
    k = case_constants(p)
    M, g = k["M"], k["g"]
    x, w2 = _set_i_x_and_w2(case, p, t)
    P = _sqrt(M * p.Delta_c - M ** 2 * w2, t, "M Delta - M^2 omega^2")
    radical = _sqrt(k["K"] * x ** 2 + w2 * (M * p.sigma - 1.0), t, "K x^2 + omega^2 (M sigma - 1)")
    num = ((4 * M ** 2 * w2 + 2 * g * x * P) * radical
           - 2 * g * M * w2 * x - g ** 2 / M * x ** 2 * P)
    return num / (g ** 2 * x ** 2 + 4 * M ** 2 * w2) + P / M


def set_ii_case_ii_constant(params: ScenarioParams) -> float:
    """``c(t) (Gamma t + chi)``, constant in Set-II Case II."""
    k = case_constants(params)
    M, g, w0 = k["M"], k["g"], params.omega0
    P = float(_sqrt(k["P2"], 0.0, "M Delta - M^2 omega0^2"))
    root = float(_sqrt(k["K"] + k["W"], 0.0, "K + W"))
    num = (4 * M ** 2 * w0 ** 2 + 2 * g * P) * root - 2 * g * M * w0 ** 2 - g ** 2 * P / M
    return num / (4 * M ** 2 * w0 ** 2 + g ** 2) + P / M


def printed_c(case, params: ScenarioParams, t, dominant_balance: bool = False):
    """
    Case-by-case reduced expression of the cross-term coefficient ``c(t)``.

    Parameters
    ----------
    case : CaseId or str
    params : ScenarioParams
    t : float or numpy.ndarray
    dominant_balance : bool, optional
        Set-II Case I only: evaluate the rearrangement with every term
        divided by ``(q B0)**2``. Requires ``B0 > 0``.

    Returns
    -------
    float or numpy.ndarray

    Raises
    ------
    NegativeRadicand
        If a radicand is negative at ``t``.

    Examples
    --------
    >>> p = ScenarioParams(M=1, q=1, omega0=1e3, B0=1e2, Gamma=1,
    ...                    sigma=1e7, Delta_c=1e7)
    >>> round(printed_c("set1-case2", p, 0.0) / 1e6, 3)
    3.635
    """
    case = CaseId.parse(case)
    p = impose_case_rates(case, params)
    t = np.asarray(t, dtype=float)
    if case.family is Family.SET_I:
        return _out(_printed_c_set_i(case.case, p, t))

    s = p.Gamma * t + p.chi
    if case.case is Case.II:
        return _out(set_ii_case_ii_constant(p) / s)

    k = case_constants(p)
    M, g, w0 = k["M"], k["g"], p.omega0
    Q = _sqrt(M * p.Delta_c * s ** 2 - M ** 2 * w0 ** 2, t, "M Delta s^2 - M^2 omega0^2")
    if dominant_balance:
        if g == 0:
            raise ValueError("the dominant-balance form needs q*B0 != 0")
        root = _sqrt(p.sigma / M + (4 * M * p.sigma * w0 ** 2 - w0 ** 2 * s ** 2) / g ** 2, t,
                     "sigma/M + (4 M sigma omega0^2 - omega0^2 s^2)/g^2")
        den = 1.0 + 4 * M ** 2 * w0 ** 2 / g ** 2
        num = (4 * Q * M * w0 ** 2 / (g ** 2 * s) + 2 * Q * np.sign(g) * root / s ** 2
               + 4 * M ** 2 * w0 ** 2 * root / (abs(g) * s ** 2) - 2 * M * w0 ** 2 / (g * s))
        return _out(num / den)
    R2 = _sqrt(g ** 2 * p.sigma / M + 4 * M * p.sigma * w0 ** 2 - w0 ** 2 * s ** 2, t,
               "g^2 sigma/M + 4 M sigma omega0^2 - omega0^2 s^2")
    num = ((4 * M ** 2 * w0 ** 2 / s ** 2 + 2 * g * Q / s ** 2) * R2
           - 2 * g * M * w0 ** 2 / s - g ** 2 * Q / (M * s))
    return _out(num / (4 * M ** 2 * w0 ** 2 + g ** 2) + np.sqrt(p.Delta_c / M - w0 ** 2 / s ** 2))


def theta_omega_constant(params: ScenarioParams) -> float:
    """
    Closed-form value of the constant ``theta Omega`` shared by Set-I
    Case II and Set-II Case II.

    ``B0 = 0`` reduces it to ``4 sqrt(M sigma - 1) P / (M omega0)``.
    """
    k = case_constants(params)
    M, g, w0 = k["M"], k["g"], params.omega0
    root = float(_sqrt(k["K"] + k["W"], 0.0, "K + W"))
    P = float(_sqrt(k["P2"], 0.0, "M Delta - M^2 omega0^2"))
    return 8 * M / (g ** 2 + 4 * M ** 2 * w0 ** 2) * (root - g / (2 * M)) * (2 * P - g)
