from ncqosc.ermakov.families import (
    EPFamily, FamilyKind, ExponentialFamily, RationalFamily, CriticalRationalFamily,
    ep_residual,
)
from ncqosc.ermakov.integrate import EPSolutionNumeric, ep_integrate, ep_integrate_family
from ncqosc.ermakov.invariant import invariant_coefficients, invariant_ode_residuals

__all__ = ['EPFamily', 'FamilyKind', 'ExponentialFamily', 'RationalFamily',
           'CriticalRationalFamily', 'ep_residual',
           'EPSolutionNumeric', 'ep_integrate', 'ep_integrate_family',
           'invariant_coefficients', 'invariant_ode_residuals']
