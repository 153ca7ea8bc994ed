from ncqosc.energy.window import (
    RealityWindow, CertifiedBound, reality_window, certify_window,
    THETA_RADICAND, OMEGA_RADICAND, POSITIVE_OFFSET,
)
from ncqosc.energy.energy import (
    EnergySeries, energy_general, energy_case_series, energy_asymptote,
    charge_asymmetry, dominant_balance_spot_check,
)

__all__ = ['RealityWindow', 'CertifiedBound', 'reality_window', 'certify_window',
           'THETA_RADICAND', 'OMEGA_RADICAND', 'POSITIVE_OFFSET',
           'EnergySeries', 'energy_general', 'energy_case_series', 'energy_asymptote',
           'charge_asymmetry', 'dominant_balance_spot_check']
