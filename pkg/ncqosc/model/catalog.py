"""
Named catalog of closed-form cases.

Every case fixes the damping factor ``f``, the frequency ``omega`` and the
field ``B`` as :class:`TimeProfile` objects and pairs them with an analytic
Ermakov-Pinney family.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Tuple

from ncqosc.errors import ConstraintViolated
from ncqosc.ermakov.families import (
    CriticalRationalFamily, EPFamily, ExponentialFamily, RationalFamily,
)
from ncqosc.model.params import Case, CaseId, Family, ScenarioParams
from ncqosc.model.profiles import TimeProfile

logger = logging.getLogger(__name__)

# (delta, Lambda) in units of Gamma, with vartheta = Gamma for every Set-I case.
_SET_I_RATES = {
    Case.I: (0.0, 0.0),
    Case.II: (0.0, 1.0),
    Case.III: (0.0, -1.0),
    Case.IV: (1.0, 1.0),
}
_SET_II_K = {Case.I: 2, Case.II: -2}


class CaseProfiles(NamedTuple):
    f: TimeProfile
    omega: TimeProfile
    B: TimeProfile
    ep: EPFamily


@dataclass(frozen=True)
class Scenario:
    """A catalog case resolved against concrete parameters."""

    case: CaseId
    params: ScenarioParams
    mu_derived: bool
    f: TimeProfile
    omega: TimeProfile
    B: TimeProfile
    ep: EPFamily


def impose_case_rates(case: CaseId, params: ScenarioParams) -> ScenarioParams:
    """
    Return a copy of ``params`` with the rate constants the case prescribes.

    Set-I cases set ``vartheta = Gamma`` with ``(delta, Lambda)`` equal to
    ``(0, 0)``, ``(0, Gamma)``, ``(0, -Gamma)`` and ``(Gamma, Gamma)`` for
    Cases I to IV. Set-II Case I uses ``k = 2`` and Case II ``k = -2``.
    """
    case = CaseId.parse(case)
    if case.family is Family.SET_I:
        delta, Lambda = _SET_I_RATES[case.case]
        changes = dict(vartheta=params.Gamma, delta=delta * params.Gamma,
                       Lambda=Lambda * params.Gamma)
    else:
        changes = dict(k=_SET_II_K[case.case])
    current = {name: getattr(params, name) for name in changes}
    if current != changes:
        logger.debug("%s imposes %s (was %s)", case, changes, current)
    return params.replace(**changes)


def derive_mu(case: CaseId, params: ScenarioParams) -> float:
    """Value of mu that satisfies the constraint of the case's EP family."""
    case = CaseId.parse(case)
    p = impose_case_rates(case, params)
    if case.family is Family.SET_I:
        return ExponentialFamily.derive_mu(p.sigma, p.Delta_c, p.theta_rate, p.xi2)
    if p.k == -2:
        return CriticalRationalFamily.derive_mu(p.sigma, p.Delta_c, p.Gamma, p.xi2)
    return RationalFamily.derive_mu(p.sigma, p.Delta_c, p.Gamma, p.k, p.xi2)


def _ep_family(case: CaseId, p: ScenarioParams, mu: float) -> EPFamily:
    if case.family is Family.SET_I:
        return ExponentialFamily(p.sigma, p.Delta_c, p.theta_rate, mu, p.xi2)
    if p.k == -2:
        return CriticalRationalFamily(p.sigma, p.Delta_c, p.Gamma, p.chi, mu, p.xi2)
    return RationalFamily(p.sigma, p.Delta_c, p.Gamma, p.chi, mu, p.k, p.xi2)


def _profiles(case: CaseId, p: ScenarioParams) -> Tuple[TimeProfile, TimeProfile, TimeProfile]:
    if case.family is Family.SET_I:
        return (TimeProfile.exponential(1.0, -p.Gamma),
                TimeProfile.exponential(p.omega0, -0.5 * p.delta),
                TimeProfile.exponential(p.B0, p.Lambda))
    return (TimeProfile.constant(1.0),
            TimeProfile.rational(p.omega0, p.Gamma, p.chi, 1.0),
            TimeProfile.rational(p.B0, p.Gamma, p.chi, 1.0))


def catalog(case, params: ScenarioParams, strict: bool = True) -> CaseProfiles:
    """
    Profile triple and EP family of a catalog case.

    Parameters
    ----------
    case : CaseId or str
        Catalog case, e.g. ``"set1-case1"``.
    params : ScenarioParams
        Scenario constants. When ``params.mu`` is None it is derived from
        the family constraint.
    strict : bool, optional
        When False a supplied mu is kept even if it violates the constraint.

    Returns
    -------
    CaseProfiles
        Named tuple ``(f, omega, B, ep)``.

    Raises
    ------
    UnknownCase
        If ``case`` does not name a catalog case.
    ConstraintViolated
        If the supplied mu violates the family constraint (``strict=True``),
        or no real mu exists.

    Examples
    --------
    >>> p = ScenarioParams(M=1, q=1, omega0=1e3, B0=1e2, Gamma=1,
    ...                    sigma=1e7, Delta_c=1e7)
    >>> f, omega, B, ep = catalog("set1-case1", p)
    >>> float(f.value(0.0)), float(B.value(2.0))
    (1.0, 100.0)
    """
    case = CaseId.parse(case)
    p = impose_case_rates(case, params)
    mu = derive_mu(case, p) if p.mu is None else p.mu
    ep = _ep_family(case, p, mu)
    if p.mu is not None and strict:
        ep.check_constraint()
    f, omega, B = _profiles(case, p)
    return CaseProfiles(f, omega, B, ep)


@lru_cache(maxsize=256)
def build_scenario(case, params: ScenarioParams, strict: bool = True) -> Scenario:
    """
    Resolve a catalog case against ``params``.

    The returned scenario carries the case-adjusted parameters with mu
    filled in; ``mu_derived`` tells whether it came from the constraint.
    """
    case = CaseId.parse(case)
    mu_derived = params.mu is None
    f, omega, B, ep = catalog(case, params, strict=strict)
    resolved = impose_case_rates(case, params).replace(mu=ep.mu)
    if mu_derived:
        logger.info("%s: mu derived from the family constraint: %.17g", case, ep.mu)
    return Scenario(case, resolved, mu_derived, f, omega, B, ep)


def general_profiles(params: ScenarioParams) -> Tuple[TimeProfile, TimeProfile, TimeProfile, bool]:
    """
    Most general exponential profiles
    ``f = exp(-Gamma t)``, ``omega = omega0 exp(-delta t / 2)``,
    ``B = B0 exp(Lambda t)``.

    Returns
    -------
    tuple
        ``(f, omega, B, off_catalog)`` where ``off_catalog`` is True when
        ``Lambda`` is not one of ``0``, ``Gamma``, ``-Gamma``.
    """
    G = params.Gamma
    off_catalog = not any(abs(params.Lambda - value) <= 1e-12 * max(1.0, abs(G))
                          for value in (0.0, G, -G))
    if off_catalog:
        logger.warning("Lambda = %g is off-catalog (catalog uses 0, +-Gamma)", params.Lambda)
    return (TimeProfile.exponential(1.0, -G),
            TimeProfile.exponential(params.omega0, -0.5 * params.delta),
            TimeProfile.exponential(params.B0, params.Lambda),
            off_catalog)


def check_all_constraints(params: ScenarioParams) -> None:
    """Build every catalog case once; raise the first ConstraintViolated."""
    from ncqosc.model.params import all_cases

    for case in all_cases():
        try:
            build_scenario(case, params)
        except ConstraintViolated:
            logger.error("constraint fails for %s", case)
            raise
