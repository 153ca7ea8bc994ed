"""
Closed-form solution families of the dissipative Ermakov-Pinney equation

    rho'' - (a'/a) rho' + a b rho = xi2 a**2 / rho**3.

Each family carries its coefficient pair ``(a, b)`` together with the
scale function ``rho`` and the algebraic constraint tying the constants.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from ncqosc.errors import ConstraintViolated, SingularDenominator

CONSTRAINT_RTOL = 1e-12


class FamilyKind(str, Enum):
    EXPONENTIAL_SET_I = "ExponentialSetI"
    RATIONAL_SET_II = "RationalSetII"
    RATIONAL_CRITICAL = "RationalCritical"


def _derive_mu(equation: str, coef: float, rhs: float) -> float:
    if not coef > 0:
        raise ConstraintViolated(equation, coef, rhs, np.inf)
    return (rhs / coef) ** 0.25


def ep_residual(a, a_dot, b, rho, rho_dot, rho_ddot, xi2):
    """
    Residual of the dissipative Ermakov-Pinney equation.

    Parameters
    ----------
    a, a_dot, b : float or numpy.ndarray
        Coefficient ``a(t)``, its time derivative and ``b(t)``.
    rho, rho_dot, rho_ddot : float or numpy.ndarray
        Scale function and its first two time derivatives.
    xi2 : float
        Integration constant.

    Returns
    -------
    float or numpy.ndarray
        ``rho'' - (a'/a) rho' + a b rho - xi2 a**2 / rho**3``.

    Raises
    ------
    SingularDenominator
        If ``a`` or ``rho`` vanishes.

    Examples
    --------
    >>> ep_residual(1.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0)
    0.0
    """
    a = np.asarray(a, dtype=float)
    rho = np.asarray(rho, dtype=float)
    if np.any(a == 0):
        raise SingularDenominator("a(t)")
    if np.any(rho == 0):
        raise SingularDenominator("rho(t)")
    value = rho_ddot - (a_dot / a) * rho_dot + a * b * rho - xi2 * a ** 2 / rho ** 3
    if np.ndim(value) == 0:
        return float(value)
    return value


def ep_residual_terms(a, a_dot, b, rho, rho_dot, rho_ddot, xi2):
    """Sum of the absolute values of the four EP terms, used as a residual scale."""
    return (np.abs(rho_ddot) + np.abs(a_dot / a * rho_dot) + np.abs(a * b * rho)
            + np.abs(xi2 * a ** 2 / rho ** 3))


class EPFamily(ABC):
    """Common interface of the analytic EP families."""

    kind: FamilyKind
    xi2: float

    @abstractmethod
    def a(self, t): ...

    @abstractmethod
    def a_dot(self, t): ...

    @abstractmethod
    def b(self, t): ...

    @abstractmethod
    def rho(self, t): ...

    @abstractmethod
    def rho_dot(self, t): ...

    @abstractmethod
    def rho_ddot(self, t): ...

    @abstractmethod
    def constraint_sides(self) -> Tuple[str, float, float]:
        """Return ``(equation, lhs, rhs)`` of the family constraint."""

    def constraint_mismatch(self) -> float:
        _, lhs, rhs = self.constraint_sides()
        return abs(lhs - rhs) / max(abs(lhs), abs(rhs))

    def check_constraint(self, rtol: float = CONSTRAINT_RTOL) -> None:
        """
        Raise ConstraintViolated if the family constraint fails.

        Raises
        ------
        ConstraintViolated
            Carries the equation, both sides and the relative mismatch.
        """
        equation, lhs, rhs = self.constraint_sides()
        mismatch = self.constraint_mismatch()
        if not mismatch <= rtol:
            raise ConstraintViolated(equation, lhs, rhs, mismatch)

    def residual(self, t):
        """EP residual of the family, relative to ``|a b rho|``."""
        raw = ep_residual(self.a(t), self.a_dot(t), self.b(t), self.rho(t),
                          self.rho_dot(t), self.rho_ddot(t), self.xi2)
        return raw / np.abs(self.a(t) * self.b(t) * self.rho(t))


@dataclass(frozen=True)
class ExponentialFamily(EPFamily):
    """
    ``a = sigma exp(-vartheta t)``, ``b = Delta exp(vartheta t)``,
    ``rho = mu exp(-vartheta t / 2)``.

    ``vartheta = 0`` gives the constant-coefficient oscillator.
    """

    sigma: float
    Delta: float
    vartheta: float
    mu: float
    xi2: float = 1.0

    kind = FamilyKind.EXPONENTIAL_SET_I

    @staticmethod
    def derive_mu(sigma: float, Delta: float, vartheta: float, xi2: float = 1.0) -> float:
        """Solve ``mu**4 (4 sigma Delta - vartheta**2) = 4 xi2 sigma**2`` for mu."""
        return _derive_mu("mu^4(4*sigma*Delta - vartheta^2) = 4*xi2*sigma^2",
                          4 * sigma * Delta - vartheta ** 2, 4 * xi2 * sigma ** 2)

    def constraint_sides(self):
        lhs = self.mu ** 4 * (4 * self.sigma * self.Delta - self.vartheta ** 2)
        return ("mu^4(4*sigma*Delta - vartheta^2) = 4*xi2*sigma^2",
                lhs, 4 * self.xi2 * self.sigma ** 2)

    def a(self, t):
        return self.sigma * np.exp(-self.vartheta * np.asarray(t, dtype=float))

    def a_dot(self, t):
        return -self.vartheta * self.a(t)

    def b(self, t):
        return self.Delta * np.exp(self.vartheta * np.asarray(t, dtype=float))

    def rho(self, t):
        return self.mu * np.exp(-0.5 * self.vartheta * np.asarray(t, dtype=float))

    def rho_dot(self, t):
        return -0.5 * self.vartheta * self.rho(t)

    def rho_ddot(self, t):
        return 0.25 * self.vartheta ** 2 * self.rho(t)


@dataclass(frozen=True)
class _Rational(EPFamily):
    sigma: float
    Delta: float
    Gamma: float
    chi: float
    mu: float

    def offset(self, t):
        s = self.Gamma * np.asarray(t, dtype=float) + self.chi
        if np.any(s <= 0):
            bad = np.atleast_1d(t)[np.atleast_1d(s) <= 0][0]
            raise SingularDenominator("Gamma*t + chi", float(bad))
        return s


@dataclass(frozen=True)
class RationalFamily(_Rational):
    """
    Rationally decaying family with integer exponent ``k``.

    With ``p = 1 + 2/k`` and ``s = Gamma t + chi``::

        a   = sigma p**((k+2)/k) s**(-(k+2)/k)
        b   = Delta (k/(k+2))**((2-k)/k) s**(-(k-2)/k)
        rho = mu p**(1/k) s**(-1/k)

    ``k = 2`` gives ``a = 4 sigma / s**2``, ``b = Delta`` and
    ``rho = sqrt(2 mu**2 / s)``. The family needs ``p > 0``, i.e.
    ``k > 0`` or ``k < -2``; ``k = -2`` is :class:`CriticalRationalFamily`.
    """

    k: int = 2
    xi2: float = 1.0

    kind = FamilyKind.RATIONAL_SET_II

    def __post_init__(self):
        if self.k == 0 or not 1 + 2 / self.k > 0:
            raise ValueError(
                f"rational family needs k > 0 or k < -2, got k={self.k}"
            )

    @staticmethod
    def derive_mu(sigma, Delta, Gamma, k, xi2=1.0) -> float:
        """Solve ``mu**4 ((k+2)**2 sigma Delta - Gamma**2) = (k+2)**2 xi2 sigma**2``."""
        k2 = (k + 2) ** 2
        return _derive_mu("Gamma^2*mu = (k+2)^2(sigma*Delta*mu - xi2*sigma^2/mu^3)",
                          k2 * sigma * Delta - Gamma ** 2, k2 * xi2 * sigma ** 2)

    def constraint_sides(self):
        k2 = (self.k + 2) ** 2
        lhs = self.mu ** 4 * (k2 * self.sigma * self.Delta - self.Gamma ** 2)
        return ("Gamma^2*mu = (k+2)^2(sigma*Delta*mu - xi2*sigma^2/mu^3)",
                lhs, k2 * self.xi2 * self.sigma ** 2)

    @property
    def _p(self) -> float:
        return 1.0 + 2.0 / self.k

    def a(self, t):
        e = (self.k + 2) / self.k
        return self.sigma * self._p ** e * self.offset(t) ** (-e)

    def a_dot(self, t):
        e = (self.k + 2) / self.k
        return -e * self.Gamma * self.a(t) / self.offset(t)

    def b(self, t):
        e = (self.k - 2) / self.k
        return self.Delta * (self.k / (self.k + 2)) ** (-e) * self.offset(t) ** (-e)

    def rho(self, t):
        return self.mu * self._p ** (1 / self.k) * self.offset(t) ** (-1 / self.k)

    def rho_dot(self, t):
        return -(self.Gamma / self.k) * self.rho(t) / self.offset(t)

    def rho_ddot(self, t):
        e = 1 / self.k
        return e * (e + 1) * self.Gamma ** 2 * self.rho(t) / self.offset(t) ** 2


@dataclass(frozen=True)
class CriticalRationalFamily(_Rational):
    """``a = sigma``, ``b = Delta / s**2``, ``rho = mu sqrt(s)`` with ``s = Gamma t + chi``."""

    xi2: float = 1.0

    kind = FamilyKind.RATIONAL_CRITICAL

    @staticmethod
    def derive_mu(sigma, Delta, Gamma, xi2=1.0) -> float:
        """Solve ``-mu**4 Gamma**2 + 4 sigma Delta mu**4 = 4 xi2 sigma**2``."""
        return _derive_mu("-mu^4*Gamma^2 + 4*sigma*Delta*mu^4 = 4*xi2*sigma^2",
                          4 * sigma * Delta - Gamma ** 2, 4 * xi2 * sigma ** 2)

    def constraint_sides(self):
        lhs = self.mu ** 4 * (4 * self.sigma * self.Delta - self.Gamma ** 2)
        return ("-mu^4*Gamma^2 + 4*sigma*Delta*mu^4 = 4*xi2*sigma^2",
                lhs, 4 * self.xi2 * self.sigma ** 2)

    def a(self, t):
        return np.full_like(np.asarray(t, dtype=float), self.sigma)

    def a_dot(self, t):
        return np.zeros_like(np.asarray(t, dtype=float))

    def b(self, t):
        return self.Delta / self.offset(t) ** 2

    def rho(self, t):
        return self.mu * np.sqrt(self.offset(t))

    def rho_dot(self, t):
        return 0.5 * self.mu * self.Gamma / np.sqrt(self.offset(t))

    def rho_ddot(self, t):
        return -0.25 * self.mu * self.Gamma ** 2 * self.offset(t) ** -1.5
