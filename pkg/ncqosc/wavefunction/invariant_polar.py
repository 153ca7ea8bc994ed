import logging
import warnings
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ncqosc.errors import NodeTooCloseToZeroOfPhi
from ncqosc.wavefunction.eigenfunction import EigenfunctionSpec, evaluate_phi

logger = logging.getLogger(__name__)

DEFAULT_STEP = 1e-3
ZERO_TOL = 1e-8


@dataclass(frozen=True)
class RatioField:
    """
    Pointwise ratio ``(I phi) / phi`` on the kept grid points.

    Attributes
    ----------
    r, ang : numpy.ndarray
        Coordinates of the kept points.
    ratio : numpy.ndarray
        Complex ratio at those points.
    skipped : tuple
        ``(r, ang)`` pairs dropped because ``|phi|`` nearly vanishes there.
    h : float
        Finite-difference step.
    """

    r: np.ndarray
    ang: np.ndarray
    ratio: np.ndarray
    skipped: Tuple[Tuple[float, float], ...]
    h: float

    @property
    def median(self) -> complex:
        return complex(np.median(self.ratio.real), np.median(self.ratio.imag))

    @property
    def spread(self) -> float:
        """``max |ratio - median| / |median|``."""
        median = self.median
        return float(np.max(np.abs(self.ratio - median)) / abs(median))


def _xi2(ep_context) -> float:
    if ep_context is None:
        return 1.0
    if isinstance(ep_context, (int, float)):
        return float(ep_context)
    return float(ep_context.xi2)


def invariant_apply_polar(spec: EigenfunctionSpec, ep_context, t, grid2d,
                          h: float = DEFAULT_STEP, zero_tol: float = ZERO_TOL) -> RatioField:
    """
    Apply the Lewis invariant in polar form,

    ``I phi = -rho**2 (phi_rr + phi_r / r + phi_aa / r**2)
    + 2i (rho rho' / a) (r phi_r + phi) + (xi2 / rho**2 + rho'**2 / a**2) r**2 phi``,

    with centered second-order differences of step ``h`` in both ``r``
    and ``ang``.

    Parameters
    ----------
    spec : EigenfunctionSpec
    ep_context : EPFamily, EPSolutionNumeric, float or None
        Source of ``xi2`` (``None`` means 1).
    t : float
        Time of the snapshot; checked against ``spec.t`` when set.
    grid2d : tuple of array_like
        ``(r_values, ang_values)``; every radius must exceed ``h``.
    h : float, optional
    zero_tol : float, optional
        Points with ``|phi| < zero_tol * max |phi|`` are skipped with a
        :class:`NodeTooCloseToZeroOfPhi` warning.

    Returns
    -------
    RatioField
    """
    if spec.t is not None and t is not None and spec.t != t:
        raise ValueError(f"spec sampled at t = {spec.t!r}, expected {t!r}")
    r_values, ang_values = (np.asarray(v, dtype=float) for v in grid2d)
    if np.any(r_values <= h):
        raise ValueError("interior stencils need every radius > h")
    R, A = np.meshgrid(r_values, ang_values, indexing="ij")

    phi = evaluate_phi(spec, R, A)
    rp, rm = evaluate_phi(spec, R + h, A), evaluate_phi(spec, R - h, A)
    ap, am = evaluate_phi(spec, R, A + h), evaluate_phi(spec, R, A - h)
    phi_r = (rp - rm) / (2 * h)
    phi_rr = (rp - 2 * phi + rm) / h ** 2
    phi_aa = (ap - 2 * phi + am) / h ** 2

    rho, rho_dot, a = spec.rho, spec.rho_dot, spec.a
    I_phi = (-rho ** 2 * (phi_rr + phi_r / R + phi_aa / R ** 2)
             + 2j * (rho * rho_dot / a) * (R * phi_r + phi)
             + (_xi2(ep_context) / rho ** 2 + rho_dot ** 2 / a ** 2) * R ** 2 * phi)

    keep = np.abs(phi) >= zero_tol * np.max(np.abs(phi))
    skipped = tuple(zip(R[~keep].tolist(), A[~keep].tolist()))
    if skipped:
        warnings.warn(f"{len(skipped)} grid points skipped where phi nearly vanishes",
                      NodeTooCloseToZeroOfPhi, stacklevel=2)
        logger.warning("ratio field: skipped %d nodes near zeros of phi", len(skipped))
    return RatioField(R[keep], A[keep], I_phi[keep] / phi[keep], skipped, h)
