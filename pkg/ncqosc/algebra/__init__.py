from ncqosc.algebra.bopp import (
    BASIS, J, LinearObservable, QuadraticForm, x1, x2, p1, p2,
    commutator, bopp_shift, commutator_table, expand_nc_hamiltonian,
    hamiltonian_coefficients,
)

__all__ = ['BASIS', 'J', 'LinearObservable', 'QuadraticForm', 'x1', 'x2', 'p1', 'p2',
           'commutator', 'bopp_shift', 'commutator_table', 'expand_nc_hamiltonian',
           'hamiltonian_coefficients']
