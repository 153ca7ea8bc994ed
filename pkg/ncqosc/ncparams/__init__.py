from ncqosc.ncparams.ncparams import (
    RootBranch, NCPair, solve_theta, solve_omega, solve_shifted_omega, coefficient_c,
    nc_pair, theta_omega_product, theta_discriminant, omega_radicand,
)
from ncqosc.ncparams.closed_forms import (
    case_constants, general_exponential_nc, closed_form_nc, printed_c,
    set_ii_case_ii_constant, theta_omega_constant,
)

__all__ = ['RootBranch', 'NCPair', 'solve_theta', 'solve_omega', 'solve_shifted_omega',
           'coefficient_c', 'nc_pair', 'theta_omega_product', 'theta_discriminant', 'omega_radicand',
           'case_constants', 'general_exponential_nc', 'closed_form_nc', 'printed_c',
           'set_ii_case_ii_constant', 'theta_omega_constant']
