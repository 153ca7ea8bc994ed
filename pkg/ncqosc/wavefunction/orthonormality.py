import logging
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial.laguerre import laggauss
from numpy.polynomial.legendre import leggauss

from ncqosc.errors import QuadratureNotConverged, UnsupportedPair
from ncqosc.wavefunction.eigenfunction import EigenfunctionSpec, evaluate_phi, spec_at

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadConfig:
    """Node counts of the product rule and the refinement tolerance."""

    angle_nodes: int = 64
    radial_nodes: int = 40
    tol: float = 1e-9
    max_quantum_number: int = 3


def _check_pair(spec: EigenfunctionSpec, limit: int) -> None:
    if spec.n > limit or spec.m > limit:
        raise UnsupportedPair(spec.n, spec.m, limit)


def _product_rule(specA, specB, angle_nodes, radial_nodes) -> complex:
    u, wu = leggauss(angle_nodes)
    ang = np.pi * (u + 1.0)
    w_ang = np.pi * wu
    s, ws = laggauss(radial_nodes)
    rho = specA.rho
    r = rho * np.sqrt(s)
    R, A = np.meshgrid(r, ang, indexing="ij")
    integrand = np.conj(evaluate_phi(specA, R, A)) * evaluate_phi(specB, R, A)
    # r dr = rho**2 / 2 ds; laggauss carries the weight exp(-s)
    weights = np.outer(ws * np.exp(s) * 0.5 * rho ** 2, w_ang)
    return complex(np.sum(weights * integrand))


def orthonormality_integral(specA: EigenfunctionSpec, specB: EigenfunctionSpec,
                            t: Optional[float] = None,
                            quad_config: Optional[QuadConfig] = None) -> complex:
    """
    Overlap ``<phi_A | phi_B>`` over the plane.

    A Gauss-Legendre rule in the angle is combined with a Gauss-Laguerre
    rule in ``s = r**2 / rho**2``. The estimate is repeated with doubled
    node counts and both must agree.

    Parameters
    ----------
    specA, specB : EigenfunctionSpec
        Snapshots at the same time (equal ``rho``, ``rho'`` and ``a``).
    t : float, optional
        Time of the snapshots, checked against ``spec.t`` when set.
    quad_config : QuadConfig, optional

    Returns
    -------
    complex

    Raises
    ------
    UnsupportedPair
        If a quantum number exceeds ``quad_config.max_quantum_number``.
    QuadratureNotConverged
        If the refined estimate differs by more than ``quad_config.tol``.

    Examples
    --------
    >>> spec = EigenfunctionSpec(0, 0, rho=1.3, rho_dot=0.2, a=0.7)
    >>> abs(orthonormality_integral(spec, spec) - 1) < 1e-6
    True
    """
    config = quad_config or QuadConfig()
    for spec in (specA, specB):
        _check_pair(spec, config.max_quantum_number)
        if t is not None and spec.t is not None and spec.t != t:
            raise ValueError(f"spec sampled at t = {spec.t!r}, expected {t!r}")
    if (specA.rho, specA.rho_dot, specA.a) != (specB.rho, specB.rho_dot, specB.a):
        raise ValueError("both eigenfunctions must be sampled from the same EP state")

    estimate = _product_rule(specA, specB, config.angle_nodes, config.radial_nodes)
    refined = _product_rule(specA, specB, 2 * config.angle_nodes, 2 * config.radial_nodes)
    if abs(refined - estimate) > config.tol:
        raise QuadratureNotConverged(estimate, refined)
    return refined


def gram_matrix(ep, t: float, pairs: Optional[Sequence[Tuple[int, int]]] = None,
                quad_config: Optional[QuadConfig] = None) -> np.ndarray:
    """
    Overlap matrix of the eigenfunctions ``pairs`` (default: every
    ``(n, m)`` with ``n, m <= 3``) at time ``t``.
    """
    config = quad_config or QuadConfig()
    if pairs is None:
        limit = config.max_quantum_number
        pairs = list(product(range(limit + 1), repeat=2))
    specs = [spec_at(ep, n, m, t) for n, m in pairs]
    G = np.empty((len(specs), len(specs)), dtype=complex)
    for i, A in enumerate(specs):
        for j, B in enumerate(specs):
            G[i, j] = orthonormality_integral(A, B, quad_config=config) if j >= i else np.conj(G[j, i])
    logger.debug("gram matrix at t = %g: max |G - I| = %.3e", t,
                 float(np.max(np.abs(G - np.eye(len(specs))))))
    return G
