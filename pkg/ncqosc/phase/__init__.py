from ncqosc.phase.closed_forms import atanh_difference, phase_closed_form
from ncqosc.phase.phase import (
    PhaseSeries, phase_integrand, phase_quadrature, phase_series, eigenstate_assemble,
)

__all__ = ['atanh_difference', 'phase_closed_form',
           'PhaseSeries', 'phase_integrand', 'phase_quadrature', 'phase_series',
           'eigenstate_assemble']
