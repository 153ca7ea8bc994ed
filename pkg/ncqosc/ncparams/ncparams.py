"""
Time-dependent noncommutativity parameters.

``theta(t)`` and ``Omega(t)`` are obtained by inverting the coefficient
formulas for ``a`` and ``b`` against the target EP family, each as a
quadratic with the ``+sqrt`` root selected by default.
"""
import logging
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ncqosc.algebra.bopp import hamiltonian_coefficients
from ncqosc.errors import (
    ConstraintViolated, DegenerateQuadratic, DegenerateQuadraticWarning,
    NegativeRadicand, NonPositiveDamping, NotApplicableCase,
)
from ncqosc.model.catalog import Scenario, build_scenario
from ncqosc.model.params import Case, CaseId, Family, ScenarioParams
from ncqosc.model.profiles import evaluate

logger = logging.getLogger(__name__)

PRODUCT_RTOL = 1e-10


class RootBranch(str, Enum):
    PRINCIPAL = "Principal"
    ALTERNATE = "Alternate"


def _first_bad(mask, t, values):
    t_b = np.broadcast_to(np.asarray(t, dtype=float), np.shape(values))
    idx = np.flatnonzero(np.atleast_1d(mask))[0]
    return float(np.atleast_1d(t_b)[idx]), float(np.atleast_1d(values)[idx])


def _checked_f(f, t):
    f_t = evaluate(f, t)
    bad = f_t <= 0
    if np.any(bad):
        raise NonPositiveDamping(*_first_bad(bad, t, f_t))
    return f_t


def _scalar(value):
    return float(value) if np.ndim(value) == 0 else value


def theta_discriminant(params: ScenarioParams, f, omega, B, a_target, t):
    """
    Discriminant of the theta quadratic,
    ``q**2 B**2 f a / (4M) + omega**2 (M a / f - 1)``.
    """
    M = params.M
    f_t = evaluate(f, t)
    a = evaluate(a_target, t)
    qB = params.q * evaluate(B, t)
    return _scalar(qB ** 2 * f_t * a / (4 * M) + evaluate(omega, t) ** 2 * (M * a / f_t - 1.0))


def omega_radicand(params: ScenarioParams, f, omega, B, b_target, t):
    """Radicand ``M b f - M**2 omega**2`` of the Omega solution."""
    M = params.M
    return _scalar(M * evaluate(b_target, t) * evaluate(f, t) - M ** 2 * evaluate(omega, t) ** 2)


def solve_theta(params: ScenarioParams, f, omega, B, a_target, t,
                branch: RootBranch = RootBranch.PRINCIPAL):
    """
    Solve the ``a``-coefficient equation for ``theta``.

    The equation ``A theta**2 + Bq theta + C = 0`` has
    ``A = (q**2 B**2 f / (4M) + M omega**2 / f) / 4``,
    ``Bq = q B f / (2M)`` and ``C = f/M - a``. Its discriminant is
    evaluated in the cancellation-free form
    ``q**2 B**2 f a / (4M) + omega**2 (M a / f - 1)``.

    Parameters
    ----------
    params : ScenarioParams
    f, omega, B : TimeProfile or callable or float
    a_target : callable or float
        Target coefficient ``a(t)``.
    t : float or numpy.ndarray
    branch : RootBranch, optional
        ``RootBranch.PRINCIPAL`` (``+sqrt``, default) or ``RootBranch.ALTERNATE``.

    Returns
    -------
    float or numpy.ndarray

    Raises
    ------
    NegativeRadicand
        If the discriminant is negative at some ``t``.
    DegenerateQuadratic
        If both ``A`` and ``Bq`` vanish.
    NonPositiveDamping
        If ``f(t) <= 0``.

    Examples
    --------
    >>> p = ScenarioParams(M=1, q=1, omega0=2, B0=0, Gamma=0, sigma=1.01, Delta_c=4)
    >>> round(solve_theta(p, 1.0, 2.0, 0.0, 1.01, 0.0), 12)
    0.1
    """
    M, q = params.M, params.q
    f_t = _checked_f(f, t)
    w2 = evaluate(omega, t) ** 2
    qB = q * evaluate(B, t)
    a = evaluate(a_target, t)

    A = 0.25 * (qB ** 2 * f_t / (4 * M) + M * w2 / f_t)
    Bq = qB * f_t / (2 * M)
    C = f_t / M - a

    if np.any(A == 0):
        if np.any(np.broadcast_to(Bq, np.shape(A))[A == 0] == 0):
            raise DegenerateQuadratic("both the quadratic and the linear theta coefficients vanish")
        warnings.warn("theta quadratic degenerates; using the linear root",
                      DegenerateQuadraticWarning, stacklevel=2)

    D = theta_discriminant(params, f_t, omega, B, a, t)
    if np.any(D < 0):
        t_bad, value = _first_bad(D < 0, t, D)
        raise NegativeRadicand(t_bad, value, "theta discriminant")
    root = np.sqrt(D)

    with np.errstate(divide="ignore", invalid="ignore"):
        if branch is RootBranch.PRINCIPAL:
            direct = (root - Bq) / (2 * A)
            stable = -2 * C / (Bq + root)
            theta = np.where((Bq > 0) & (Bq + root > 0), stable, direct)
        else:
            direct = -(Bq + root) / (2 * A)
            stable = 2 * C / (root - Bq)
            theta = np.where((Bq < 0) & (root - Bq > 0), stable, direct)
        theta = np.where(A == 0, -C / np.where(Bq == 0, 1.0, Bq), theta)
    return _scalar(theta)


def solve_shifted_omega(params: ScenarioParams, f, omega, B, b_target, t,
                        branch: RootBranch = RootBranch.PRINCIPAL):
    """
    Shifted momentum parameter ``kappa = Omega + q B``.

    ``b = f kappa**2 / (4M) + M omega**2 / f`` gives
    ``kappa = +-(2/f) sqrt(M b f - M**2 omega**2)``.

    Raises
    ------
    NegativeRadicand
        If ``M b f - M**2 omega**2 < 0``.
    """
    f_t = _checked_f(f, t)
    radicand = omega_radicand(params, f_t, omega, B, b_target, t)
    if np.any(radicand < 0):
        t_bad, value = _first_bad(radicand < 0, t, radicand)
        raise NegativeRadicand(t_bad, value, "M b f - M^2 omega^2")
    sign = 1.0 if branch is RootBranch.PRINCIPAL else -1.0
    return _scalar(sign * 2.0 / f_t * np.sqrt(radicand))


def solve_omega(params: ScenarioParams, f, omega, B, b_target, t,
                branch: RootBranch = RootBranch.PRINCIPAL):
    """
    Solve the ``b``-coefficient equation for ``Omega``.

    Returns ``-q B + (2/f) sqrt(M b f - M**2 omega**2)`` on the principal
    branch and the ``-sqrt`` root otherwise.

    Raises
    ------
    NegativeRadicand
        If ``M b f - M**2 omega**2 < 0``.
    NonPositiveDamping
        If ``f(t) <= 0``.

    Examples
    --------
    >>> p = ScenarioParams(M=1, q=1, omega0=2, B0=0, Gamma=0, sigma=1.01, Delta_c=4)
    >>> solve_omega(p, 1.0, 2.0, 0.0, 4.0, 0.0)
    0.0
    """
    kappa = solve_shifted_omega(params, f, omega, B, b_target, t, branch)
    return _scalar(kappa - params.q * evaluate(B, t))


def coefficient_c(params: ScenarioParams, f, omega, B, theta, Omega, t, kappa=None):
    """
    Cross-term coefficient ``c`` of the commutative Hamiltonian.

    With ``kappa`` given the balanced form is evaluated, see
    :func:`ncqosc.algebra.hamiltonian_coefficients`.
    """
    return hamiltonian_coefficients(params, f, omega, B, theta, Omega, t, kappa=kappa)[2]


@dataclass(frozen=True)
class NCPair:
    """
    Noncommutativity parameters of a resolved scenario.

    ``theta``, ``Omega`` and ``kappa = Omega + q B`` are evaluated lazily
    at any time; ``c`` uses the balanced coefficient form.
    """

    scenario: Scenario
    root_branch: RootBranch = RootBranch.PRINCIPAL

    @property
    def params(self) -> ScenarioParams:
        return self.scenario.params

    def _profiles(self):
        s = self.scenario
        return s.f, s.omega, s.B

    def theta(self, t):
        return solve_theta(self.params, *self._profiles(), self.scenario.ep.a, t,
                           self.root_branch)

    def kappa(self, t):
        return solve_shifted_omega(self.params, *self._profiles(), self.scenario.ep.b, t,
                                   self.root_branch)

    def Omega(self, t):
        return solve_omega(self.params, *self._profiles(), self.scenario.ep.b, t,
                           self.root_branch)

    def coefficients(self, t, balanced: bool = True):
        """``(a, b, c)`` from the solved parameters."""
        theta = self.theta(t)
        if balanced:
            return hamiltonian_coefficients(self.params, *self._profiles(), theta, None, t,
                                            kappa=self.kappa(t))
        return hamiltonian_coefficients(self.params, *self._profiles(), theta,
                                        self.Omega(t), t)

    def c(self, t):
        return self.coefficients(t)[2]

    def back_substitution(self, t, balanced: bool = False):
        """
        Relative deviation of the reconstructed ``(a, b)`` from the EP targets.

        Returns
        -------
        tuple
            ``(err_a, err_b)``.
        """
        a, b, _ = self.coefficients(t, balanced=balanced)
        a_target = evaluate(self.scenario.ep.a, t)
        b_target = evaluate(self.scenario.ep.b, t)
        return (_scalar(np.abs(a - a_target) / np.abs(a_target)),
                _scalar(np.abs(b - b_target) / np.abs(b_target)))


def nc_pair(case, params: ScenarioParams, branch: RootBranch = RootBranch.PRINCIPAL,
            strict: bool = True) -> NCPair:
    """
    Noncommutativity parameters of a catalog case.

    Examples
    --------
    >>> p = ScenarioParams(M=1, q=1, omega0=1e3, B0=1e2, Gamma=1,
    ...                    sigma=1e7, Delta_c=1e7)
    >>> pair = nc_pair("set1-case2", p)
    >>> err_a, err_b = pair.back_substitution(1.0)
    >>> err_a < 1e-10 and err_b < 1e-10
    True
    """
    if branch is RootBranch.ALTERNATE:
        logger.info("%s: alternate root branch selected", case)
    return NCPair(build_scenario(CaseId.parse(case), params, strict), branch)


_PRODUCT_CASES = (CaseId(Family.SET_I, Case.II), CaseId(Family.SET_II, Case.II))


def theta_omega_product(case, params: ScenarioParams, t):
    """
    Product ``theta(t) Omega(t)`` for the two cases where it is constant.

    The product is sampled at ``t`` together with ``t = 0`` and checked for
    time-constancy (``std / |mean| <= 1e-10``).

    Raises
    ------
    NotApplicableCase
        For cases other than Set-I Case II and Set-II Case II.
    ConstraintViolated
        If the sampled product is not constant.
    """
    case = CaseId.parse(case)
    if case not in _PRODUCT_CASES:
        raise NotApplicableCase(
            f"theta*Omega is constant only for {', '.join(map(str, _PRODUCT_CASES))}, not {case}"
        )
    pair = nc_pair(case, params)
    samples = np.append(0.0, np.atleast_1d(np.asarray(t, dtype=float)))
    product = pair.theta(samples) * pair.Omega(samples)
    mean = float(np.mean(product))
    spread = float(np.std(product))
    scale = abs(mean) if mean != 0 else 1.0
    if spread / scale > PRODUCT_RTOL:
        raise ConstraintViolated("theta*Omega = const", float(product.min()),
                                 float(product.max()), spread / scale)
    return _scalar(product[1:] if np.ndim(t) else product[1])
