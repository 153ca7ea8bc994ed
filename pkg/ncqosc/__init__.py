from ncqosc.model.params import Case, CaseId, Family, ScenarioParams, all_cases
from ncqosc.model.catalog import build_scenario
from ncqosc.ermakov.families import CriticalRationalFamily, ExponentialFamily, RationalFamily
from ncqosc.ermakov.integrate import ep_integrate
from ncqosc.ncparams.ncparams import nc_pair
from ncqosc.phase.phase import phase_series
from ncqosc.wavefunction.eigenfunction import eigenfunction, spec_at
from ncqosc.energy.window import reality_window, certify_window
from ncqosc.energy.energy import energy_general, energy_case_series, energy_asymptote
from ncqosc.dataset.load_data import load_scenario, get_scenario_names
from ncqosc.statistics.convergence import R2, convergence_order
from ncqosc.tab_validation.suites import run_validation
from ncqosc.tab_validation.tab_validation import tab_validation
from ncqosc.graphics.ggenergy import ggenergy

__version__ = "0.1.0"
__all__ = ['Case', 'CaseId', 'Family', 'ScenarioParams', 'all_cases',
           'build_scenario',
           'CriticalRationalFamily', 'ExponentialFamily', 'RationalFamily', 'ep_integrate',
           'nc_pair', 'phase_series', 'eigenfunction', 'spec_at',
           'reality_window', 'certify_window',
           'energy_general', 'energy_case_series', 'energy_asymptote',
           'load_scenario', 'get_scenario_names',
           'R2', 'convergence_order',
           'run_validation', 'tab_validation',
           'ggenergy']
