"""
Linear canonical algebra on the ordered basis ``(x1, x2, p1, p2)``.

Observables linear in the canonical variables are coefficient vectors;
their commutators follow from the symplectic form
``J = [[0, I], [-I, 0]]`` as ``[u, v] = i u^T J v`` (hbar = 1).
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ncqosc.errors import NonPositiveDamping
from ncqosc.model.params import ScenarioParams
from ncqosc.model.profiles import evaluate

BASIS = ("x1", "x2", "p1", "p2")
J = np.block([[np.zeros((2, 2)), np.eye(2)], [-np.eye(2), np.zeros((2, 2))]])


@dataclass(frozen=True)
class LinearObservable:
    """
    Linear combination of ``x1, x2, p1, p2``.

    Examples
    --------
    >>> u = LinearObservable((1.0, 0.0, 0.0, -0.05))
    >>> u((2.0, 0.0, 0.0, 10.0))
    1.5
    """

    coeffs: Tuple[float, float, float, float]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) != 4:
            raise ValueError(f"a linear observable needs 4 coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.coeffs)

    def __add__(self, other: "LinearObservable") -> "LinearObservable":
        return LinearObservable(self.vector + other.vector)

    def __sub__(self, other: "LinearObservable") -> "LinearObservable":
        return LinearObservable(self.vector - other.vector)

    def __mul__(self, scalar: float) -> "LinearObservable":
        return LinearObservable(float(scalar) * self.vector)

    __rmul__ = __mul__

    def __call__(self, z) -> float:
        """Value at the phase-space point ``z = (x1, x2, p1, p2)``."""
        return float(self.vector @ np.asarray(z, dtype=float))


x1, x2, p1, p2 = (LinearObservable(row) for row in np.eye(4))


@dataclass(frozen=True, eq=False)
class QuadraticForm:
    """
    Quadratic phase-space function ``H = 1/2 z^T Q z``.

    Attributes
    ----------
    matrix : numpy.ndarray
        Symmetric 4x4 matrix over ``(x1, x2, p1, p2)``.
    """

    matrix: np.ndarray

    def __post_init__(self):
        Q = np.asarray(self.matrix, dtype=float)
        if Q.shape != (4, 4):
            raise ValueError(f"quadratic form needs a 4x4 matrix, got shape {Q.shape}")
        object.__setattr__(self, "matrix", 0.5 * (Q + Q.T))

    @classmethod
    def square(cls, u: LinearObservable, weight: float = 1.0) -> "QuadraticForm":
        """``(weight / 2) u**2``."""
        return cls(weight * np.outer(u.vector, u.vector))

    @classmethod
    def from_coefficients(cls, a: float, b: float, c: float) -> "QuadraticForm":
        """
        ``(a/2)(p1^2 + p2^2) + (b/2)(x1^2 + x2^2) + c (p1 x2 - p2 x1)``.
        """
        Q = np.diag([b, b, a, a]).astype(float)
        Q[2, 1] = Q[1, 2] = c
        Q[3, 0] = Q[0, 3] = -c
        return cls(Q)

    def __add__(self, other: "QuadraticForm") -> "QuadraticForm":
        return QuadraticForm(self.matrix + other.matrix)

    def __call__(self, z) -> float:
        z = np.asarray(z, dtype=float)
        return float(0.5 * z @ self.matrix @ z)

    def coefficients(self) -> Tuple[float, float, float]:
        """Read ``(a, b, c)`` back from the matrix entries."""
        Q = self.matrix
        return float(Q[2, 2]), float(Q[0, 0]), float(Q[2, 1])


def commutator(u: LinearObservable, v: LinearObservable) -> complex:
    """
    Canonical commutator ``[u, v] = i u^T J v``.

    Examples
    --------
    >>> commutator(x1, p1)
    1j
    >>> commutator(x1, x2)
    0j
    """
    return 1j * float(u.vector @ J @ v.vector)


def bopp_shift(theta: float, Omega: float) -> Tuple[LinearObservable, ...]:
    """
    Noncommutative observables in terms of the canonical ones.

    Parameters
    ----------
    theta, Omega : float
        Position and momentum noncommutativity.

    Returns
    -------
    tuple of LinearObservable
        ``(X1, X2, P1, P2)`` with ``X1 = x1 - (theta/2) p2``,
        ``X2 = x2 + (theta/2) p1``, ``P1 = p1 + (Omega/2) x2`` and
        ``P2 = p2 - (Omega/2) x1``.

    Examples
    --------
    >>> X1, X2, P1, P2 = bopp_shift(0.1, 0.3)
    >>> commutator(X1, X2), commutator(P1, P2)
    (0.1j, 0.3j)
    """
    X1 = x1 - 0.5 * theta * p2
    X2 = x2 + 0.5 * theta * p1
    P1 = p1 + 0.5 * Omega * x2
    P2 = p2 - 0.5 * Omega * x1
    return X1, X2, P1, P2


def commutator_table(theta: float, Omega: float) -> np.ndarray:
    """4x4 complex table of ``[U_i, U_j]`` over ``(X1, X2, P1, P2)``."""
    U = np.array([u.vector for u in bopp_shift(theta, Omega)])
    return 1j * (U @ J @ U.T)


def _check_damping(f_t, t) -> None:
    bad = np.atleast_1d(f_t) <= 0
    if np.any(bad):
        where = np.atleast_1d(np.broadcast_to(t, np.shape(f_t)))[bad][0] if np.ndim(f_t) else t
        raise NonPositiveDamping(float(where), float(np.atleast_1d(f_t)[bad][0]))


def expand_nc_hamiltonian(params: ScenarioParams, f, omega, B, theta: float,
                          Omega: float, t: float) -> QuadraticForm:
    """
    Substitute the Bopp-shifted observables into the damped Landau
    Hamiltonian

    ``H = (f/2M) sum (P_i - q A_i)^2 + (M omega^2 / 2f) sum X_i^2``

    with the Coulomb-gauge potential ``A = (B/2)(-X2, X1)``.

    Parameters
    ----------
    params : ScenarioParams
        Supplies ``M`` and ``q``.
    f, omega, B : TimeProfile or callable or float
        Damping factor, frequency and field.
    theta, Omega : float
        Noncommutativity at ``t``.
    t : float
        Time.

    Returns
    -------
    QuadraticForm

    Raises
    ------
    NonPositiveDamping
        If ``f(t) <= 0``.
    """
    M, q = params.M, params.q
    f_t = float(evaluate(f, t))
    _check_damping(f_t, t)
    w_t, B_t = float(evaluate(omega, t)), float(evaluate(B, t))
    X1, X2, P1, P2 = bopp_shift(theta, Omega)
    L1 = P1 + 0.5 * q * B_t * X2
    L2 = P2 - 0.5 * q * B_t * X1
    kinetic = f_t / M
    potential = M * w_t ** 2 / f_t
    return (QuadraticForm.square(L1, kinetic) + QuadraticForm.square(L2, kinetic)
            + QuadraticForm.square(X1, potential) + QuadraticForm.square(X2, potential))


def hamiltonian_coefficients(params: ScenarioParams, f, omega, B, theta, Omega, t,
                             kappa: Optional[float] = None):
    """
    Commutative coefficients ``(a, b, c)`` of the expanded Hamiltonian.

    Parameters
    ----------
    params : ScenarioParams
    f, omega, B : TimeProfile or callable or float
    theta, Omega : float or numpy.ndarray
        Noncommutativity. ``Omega`` is ignored when ``kappa`` is given.
    t : float or numpy.ndarray
    kappa : float or numpy.ndarray, optional
        Shifted momentum parameter ``Omega + q B``. When given the balanced
        forms ``a = (f/M)(1 + qB theta/4)**2 + M omega**2 theta**2 / (4f)``,
        ``b = f kappa**2 / (4M) + M omega**2 / f`` and
        ``c = f kappa (1 + qB theta/4) / (2M) + M omega**2 theta / (2f)``
        are used; they are algebraically identical to the literal ones and
        avoid cancellation at very large ``qB``.

    Returns
    -------
    tuple
        ``(a, b, c)``.

    Raises
    ------
    NonPositiveDamping
        If ``f(t) <= 0``.

    Examples
    --------
    >>> p = ScenarioParams(M=1, q=1, omega0=2, B0=0, Gamma=0, sigma=1, Delta_c=1)
    >>> a, b, c = hamiltonian_coefficients(p, 1.0, 2.0, 0.0, 0.1, 0.3, 0.0)
    >>> round(float(a), 12), round(float(b), 12), round(float(c), 12)
    (1.01, 4.0225, 0.35)
    """
    M, q = params.M, params.q
    f_t = evaluate(f, t)
    _check_damping(f_t, t)
    w2 = evaluate(omega, t) ** 2
    qB = q * evaluate(B, t)
    theta = np.asarray(theta, dtype=float)

    if kappa is not None:
        kappa = np.asarray(kappa, dtype=float)
        shift = 1.0 + 0.25 * qB * theta
        a = f_t / M * shift ** 2 + M * w2 * theta ** 2 / (4 * f_t)
        b = f_t * kappa ** 2 / (4 * M) + M * w2 / f_t
        c = f_t * kappa * shift / (2 * M) + M * w2 * theta / (2 * f_t)
    else:
        Omega = np.asarray(Omega, dtype=float)
        field = qB ** 2 * f_t / (4 * M) + M * w2 / f_t
        a = f_t / M + qB * f_t * theta / (2 * M) + 0.25 * field * theta ** 2
        b = field + qB * f_t * Omega / (2 * M) + f_t * Omega ** 2 / (4 * M)
        c = 0.5 * (qB * f_t / M * (1 + theta * Omega / 4) + Omega * f_t / M + field * theta)
    if np.ndim(a) == 0:
        return float(a), float(b), float(c)
    return a, b, c
