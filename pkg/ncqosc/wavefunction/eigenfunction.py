"""
Eigenfunctions of the Lewis invariant in polar coordinates.

For quantum numbers ``n, m >= 0`` (angular number ``l = m - n``)::

    phi = lam (i rho)**m / sqrt(m!) r**(n-m) U(-m, 1 - m + n, r**2 / rho**2)
          exp(i (m - n) ang - (a - i rho rho') r**2 / (2 a rho**2))

with ``lam**2 = 1 / (pi n! rho**(2(n+1)))`` and hbar = 1. The Gaussian
width assumes ``xi2 = 1``.
"""
from dataclasses import dataclass
from math import factorial, pi
from typing import Optional

import numpy as np

from ncqosc.errors import NegativeNormalization
from ncqosc.ermakov.families import CriticalRationalFamily, EPFamily, RationalFamily
from ncqosc.ermakov.invariant import _state
from ncqosc.model.params import CaseId
from ncqosc.wavefunction.tricomi import genlaguerre_recurrence, tricomi_U_poly


@dataclass(frozen=True)
class EigenfunctionSpec:
    """
    Quantum numbers together with the EP state ``(rho, rho', a)`` at one time.

    Raises
    ------
    TypeError
        If ``n`` or ``m`` is not an integer.
    ValueError
        If ``n`` or ``m`` is negative or ``a <= 0``.
    """

    n: int
    m: int
    rho: float
    rho_dot: float
    a: float
    case: Optional[CaseId] = None
    t: Optional[float] = None

    def __post_init__(self):
        for name in ("n", "m"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise TypeError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be >= 0, got {value}")
        if not self.a > 0:
            raise ValueError(f"a must be > 0, got {self.a!r}")

    @property
    def l(self) -> int:
        return self.m - self.n

    @property
    def normalization(self) -> float:
        """``lam_n = (pi n! rho**(2(n+1)))**(-1/2)``."""
        rho2 = self.rho ** 2
        if not rho2 > 0:
            raise NegativeNormalization(f"rho**2 = {rho2!r} must be > 0")
        return 1.0 / np.sqrt(pi * factorial(self.n) * rho2 ** (self.n + 1))


@dataclass(frozen=True)
class PolarPoint:
    """Point ``(r, ang)``; the angle is reduced to ``[0, 2 pi)``."""

    r: float
    ang: float

    def __post_init__(self):
        if not self.r >= 0:
            raise ValueError(f"r must be >= 0, got {self.r!r}")
        object.__setattr__(self, "ang", float(np.mod(self.ang, 2 * pi)))


def spec_at(ep, n: int, m: int, t: float, case=None) -> EigenfunctionSpec:
    """Snapshot of an analytic or numerical EP solution at time ``t``."""
    a, rho, rho_dot = _state(ep, t)
    return EigenfunctionSpec(n, m, float(rho), float(rho_dot), float(a),
                             None if case is None else CaseId.parse(case), float(t))


def _radial_tower(n: int, m: int, r, rho):
    """
    ``r**(n-m) U(-m, 1-m+n, r**2/rho**2)``.

    For ``m > n`` the regular equivalent
    ``(-1)**n n! r**(m-n) rho**(2(n-m)) L_n^(m-n)(s)`` avoids ``0 * inf``
    at the origin.
    """
    s = (r / rho) ** 2
    if m <= n:
        return r ** (n - m) * tricomi_U_poly(m, 1.0 - m + n, s)
    k = m - n
    return (-1) ** n * factorial(n) * r ** k * rho ** (-2 * k) * genlaguerre_recurrence(n, k, s)


def _assemble(n, m, lam, rho, width, r, ang):
    """Shared evaluation given ``width = (a - i rho rho') / (2 a rho**2)``."""
    r = np.asarray(r, dtype=float)
    ang = np.asarray(ang, dtype=float)
    prefactor = lam * (1j * rho) ** m / np.sqrt(factorial(m))
    return (prefactor * _radial_tower(n, m, r, rho)
            * np.exp(1j * (m - n) * ang - width * r ** 2))


def evaluate_phi(spec: EigenfunctionSpec, r, ang):
    """Vectorized eigenfunction on arrays of radii and angles."""
    lam = spec.normalization
    width = (spec.a - 1j * spec.rho * spec.rho_dot) / (2 * spec.a * spec.rho ** 2)
    value = _assemble(spec.n, spec.m, lam, spec.rho, width, r, ang)
    return complex(value) if np.ndim(value) == 0 else value


def eigenfunction(spec: EigenfunctionSpec, pt: PolarPoint, t: Optional[float] = None) -> complex:
    """
    Invariant eigenfunction ``phi_{n,m-n}(r, ang)``.

    Parameters
    ----------
    spec : EigenfunctionSpec
        Quantum numbers and the EP state at the evaluation time.
    pt : PolarPoint
    t : float, optional
        Evaluation time; must match ``spec.t`` when both are set.

    Returns
    -------
    complex

    Raises
    ------
    NegativeNormalization
        If ``rho**2 <= 0``.

    Examples
    --------
    >>> spec = EigenfunctionSpec(0, 0, rho=1.0, rho_dot=0.0, a=1.0)
    >>> bool(abs(eigenfunction(spec, PolarPoint(0.0, 0.0)) - 1 / np.sqrt(np.pi)) < 1e-15)
    True
    """
    if t is not None and spec.t is not None and t != spec.t:
        raise ValueError(f"spec was sampled at t = {spec.t!r}, not {t!r}")
    return evaluate_phi(spec, pt.r, pt.ang)


def eigenfunction_exponential(n, m, sigma, vartheta, mu, r, ang, t):
    """
    Set-I form with ``rho = mu exp(-vartheta t/2)`` inserted::

        lam**2 = exp(vartheta (n+1) t) / (pi n! mu**(2(n+1)))
        width  = exp(vartheta t) / (2 mu**2) + i vartheta exp(vartheta t) / (4 sigma)
    """
    rho = mu * np.exp(-0.5 * vartheta * t)
    lam = np.sqrt(np.exp(vartheta * (n + 1) * t) / (pi * factorial(n) * mu ** (2 * (n + 1))))
    width = np.exp(vartheta * t) / (2 * mu ** 2) + 1j * vartheta * np.exp(vartheta * t) / (4 * sigma)
    return _assemble(n, m, lam, rho, width, r, ang)


def eigenfunction_rational(n, m, sigma, Gamma, chi, mu, k, r, ang, t):
    """
    Rational-family form for exponent ``k``. There ``rho rho' / a`` equals
    the constant ``-Gamma mu**2 / (sigma (k+2))``, so::

        rho**2 = mu**2 (1 + 2/k)**(2/k) s**(-2/k)
        width  = (1 + i Gamma mu**2 / (sigma (k+2))) / (2 rho**2)

    with ``s = Gamma t + chi``; ``k = 2`` gives ``rho**2 = 2 mu**2 / s``.
    """
    s = Gamma * t + chi
    rho = mu * (1 + 2 / k) ** (1 / k) * s ** (-1 / k)
    lam = (pi * factorial(n) * rho ** (2 * (n + 1))) ** -0.5
    width = (1 + 1j * Gamma * mu ** 2 / (sigma * (k + 2))) / (2 * rho ** 2)
    return _assemble(n, m, lam, rho, width, r, ang)


def eigenfunction_critical(n, m, sigma, Gamma, chi, mu, r, ang, t):
    """
    Critical rational form, ``rho = mu sqrt(s)`` and
    ``width = (1 - i mu**2 Gamma / (2 sigma)) / (2 mu**2 s)``.
    """
    s = Gamma * t + chi
    rho = mu * np.sqrt(s)
    lam = (pi * factorial(n) * mu ** (2 * (n + 1)) * s ** (n + 1)) ** -0.5
    width = (1 - 1j * mu ** 2 * Gamma / (2 * sigma)) / (2 * mu ** 2 * s)
    return _assemble(n, m, lam, rho, width, r, ang)


def eigenfunction_family(ep: EPFamily, n: int, m: int, r, ang, t):
    """Dispatch to the closed specialization of an analytic family."""
    if isinstance(ep, CriticalRationalFamily):
        return eigenfunction_critical(n, m, ep.sigma, ep.Gamma, ep.chi, ep.mu, r, ang, t)
    if isinstance(ep, RationalFamily):
        return eigenfunction_rational(n, m, ep.sigma, ep.Gamma, ep.chi, ep.mu, ep.k, r, ang, t)
    return eigenfunction_exponential(n, m, ep.sigma, ep.vartheta, ep.mu, r, ang, t)


def sample_density(spec: EigenfunctionSpec, r, ang) -> np.ndarray:
    """
    ``|phi|**2`` on the grid ``r x ang`` (``indexing='ij'``).

    Returns
    -------
    numpy.ndarray
        Shape ``(len(r), len(ang))``.
    """
    R, A = np.meshgrid(np.atleast_1d(r), np.atleast_1d(ang), indexing="ij")
    return np.abs(evaluate_phi(spec, R, A)) ** 2
