from ncqosc.wavefunction.tricomi import tricomi_U_poly, genlaguerre_recurrence
from ncqosc.wavefunction.eigenfunction import (
    EigenfunctionSpec, PolarPoint, spec_at, eigenfunction, evaluate_phi,
    eigenfunction_exponential, eigenfunction_rational, eigenfunction_critical,
    eigenfunction_family, sample_density,
)
from ncqosc.wavefunction.orthonormality import QuadConfig, orthonormality_integral, gram_matrix
from ncqosc.wavefunction.invariant_polar import RatioField, invariant_apply_polar

__all__ = ['tricomi_U_poly', 'genlaguerre_recurrence',
           'EigenfunctionSpec', 'PolarPoint', 'spec_at', 'eigenfunction', 'evaluate_phi',
           'eigenfunction_exponential', 'eigenfunction_rational', 'eigenfunction_critical',
           'eigenfunction_family', 'sample_density',
           'QuadConfig', 'orthonormality_integral', 'gram_matrix',
           'RatioField', 'invariant_apply_polar']
