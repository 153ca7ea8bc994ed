"""
Elementary closed forms of the phase for Set-I Cases I to III and
Set-II Case II.
"""
import numpy as np

from ncqosc.errors import DomainError, OutOfCatalog
from ncqosc.model.catalog import build_scenario
from ncqosc.model.params import Case, CaseId, Family, ScenarioParams
from ncqosc.ncparams.closed_forms import case_constants, printed_c, set_ii_case_ii_constant

IMAG_TOL = 1e-10


def atanh_difference(x_end, x_start, subterm: str):
    """
    ``atanh(x_end) - atanh(x_start)`` through principal-value logarithms.

    Each term is ``log((1 + x) / (1 - x)) / 2`` on the complex plane, so
    arguments beyond one in magnitude are allowed as long as both lie on
    the same side; the imaginary parts then cancel.

    Raises
    ------
    DomainError
        If the remaining imaginary part exceeds ``1e-10`` or a term is not
        finite.

    Examples
    --------
    >>> round(atanh_difference(3.0, 2.0, "demo"), 12)
    -0.202732554054
    """
    x_end = np.asarray(x_end, dtype=float)
    x_start = np.asarray(x_start, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio_end = np.asarray((1 + x_end) / (1 - x_end)).astype(complex)
        ratio_start = np.asarray((1 + x_start) / (1 - x_start)).astype(complex)
        value = 0.5 * (np.log(ratio_end) - np.log(ratio_start))
    if not np.all(np.isfinite(value)):
        raise DomainError(subterm, "atanh argument equals +-1")
    residue = float(np.max(np.abs(value.imag)))
    if residue > IMAG_TOL:
        raise DomainError(subterm, f"imaginary residue {residue:.3e} after pairing")
    return float(value.real) if np.ndim(value) == 0 else value.real


def _real_sqrt(value, subterm):
    value = np.asarray(value, dtype=float)
    if np.any(value < 0):
        raise DomainError(subterm, f"negative radicand {float(np.min(value))!r}")
    return np.sqrt(value)


def _exponential_rate_phase(p: ScenarioParams, rate: float, t):
    """
    ``int_0^t (c - sigma/mu**2) dT`` when ``B f / B0 = exp(-rate t)`` and
    ``omega = omega0``.
    """
    k = case_constants(p)
    M, g, K, W, w0 = k["M"], k["g"], k["K"], k["W"], p.omega0
    P = _real_sqrt(k["P2"], "sqrt(M Delta - M^2 omega0^2)")
    slope0 = -p.sigma / p.mu ** 2
    if g < 0:
        raise DomainError("atan(2 M omega0 y / g)", "the closed form assumes q B0 >= 0")
    if g == 0 or rate == 0:
        c = printed_c(CaseId(Family.SET_I, Case.II), p, 0.0)
        return (c + slope0) * t

    y = np.exp(rate * t)
    sqW = _real_sqrt(W, "sqrt(omega0^2 (M sigma - 1))")
    R_y = _real_sqrt(K + W * y ** 2, "sqrt(K + W y^2)")
    R_1 = float(_real_sqrt(K + W, "sqrt(K + W)"))
    if sqW == 0:
        raise DomainError("ln(sqrt(W) y + sqrt(K + W y^2))", "M sigma = 1")

    T1 = (P / M + slope0) * t
    T2 = sqW / rate * np.log((sqW * y + R_y) / (sqW + R_1))
    T3 = w0 / rate * (np.arctan(w0 * y / R_y) - np.arctan(w0 / R_1))
    T4 = P / (M * rate) * atanh_difference(2 * M * R_y / g, 2 * M * R_1 / g,
                                           "atanh(2 M sqrt(K + W y^2) / g)")
    T5 = -np.sqrt((p.Delta_c - M * w0 ** 2) * p.sigma) / rate * atanh_difference(
        np.sqrt((g ** 2 * p.sigma + 4 * M * W * y ** 2) / (g ** 2 * p.sigma)),
        np.sqrt((g ** 2 * p.sigma + 4 * M * W) / (g ** 2 * p.sigma)),
        "atanh(sqrt((g^2 sigma + 4 M W y^2) / (g^2 sigma)))")
    T6 = -w0 / rate * (np.arctan(2 * M * w0 * y / g) - np.arctan(2 * M * w0 / g))
    T7 = P / (2 * rate * M) * np.log((g ** 2 / y ** 2 + 4 * M ** 2 * w0 ** 2)
                                     / (g ** 2 + 4 * M ** 2 * w0 ** 2))
    return T1 + T2 + T3 + T4 + T5 + T6 + T7


def phase_closed_form(case, n: int, l: int, params: ScenarioParams, t):
    """
    Closed-form phase ``Theta_{n,l}(t)``.

    Parameters
    ----------
    case : CaseId or str
        Set-I Cases I, II, III or Set-II Case II.
    n, l : int
        Quantum numbers with ``n + l >= 0``.
    params : ScenarioParams
    t : float or numpy.ndarray

    Returns
    -------
    float or numpy.ndarray

    Raises
    ------
    OutOfCatalog
        For Set-I Case IV and Set-II Case I.
    DomainError
        If a logarithm, square root or paired inverse hyperbolic tangent
        leaves its real domain.

    Examples
    --------
    >>> p = ScenarioParams(M=1, q=1, omega0=1e3, B0=1e2, Gamma=1,
    ...                    sigma=1e7, Delta_c=1e7)
    >>> phase_closed_form("set1-case1", 1, 0, p, 0.0)
    0.0
    """
    case = CaseId.parse(case)
    if n + l < 0:
        raise ValueError(f"n + l must be >= 0, got n={n}, l={l}")
    if case in (CaseId(Family.SET_I, Case.IV), CaseId(Family.SET_II, Case.I)):
        raise OutOfCatalog(f"{case} has no elementary closed-form phase; use phase_quadrature")
    p = build_scenario(case, params).params
    t = np.asarray(t, dtype=float)
    if n + l == 0:
        value = np.zeros_like(t)
    elif case.family is Family.SET_II:
        slope = set_ii_case_ii_constant(p) - p.sigma / p.mu ** 2
        if p.Gamma == 0:
            value = (n + l) * slope * t / p.chi
        else:
            value = (n + l) * slope * np.log((p.Gamma * t + p.chi) / p.chi) / p.Gamma
    elif case.case is Case.II:
        value = (n + l) * (printed_c(case, p, 0.0) - p.sigma / p.mu ** 2) * t
    else:
        rate = p.Gamma if case.case is Case.I else 2 * p.Gamma
        value = (n + l) * _exponential_rate_phase(p, rate, t)
    value = value + 0.0
    return float(value) if np.ndim(value) == 0 else value
