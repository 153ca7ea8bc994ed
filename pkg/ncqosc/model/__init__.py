from ncqosc.model.params import Family, Case, CaseId, ScenarioParams, all_cases
from ncqosc.model.profiles import ProfileKind, TimeProfile, evaluate
from ncqosc.model.catalog import (
    CaseProfiles, Scenario, catalog, build_scenario, derive_mu, impose_case_rates,
    general_profiles, check_all_constraints,
)

__all__ = ['Family', 'Case', 'CaseId', 'ScenarioParams', 'all_cases',
           'ProfileKind', 'TimeProfile', 'evaluate',
           'CaseProfiles', 'Scenario', 'catalog', 'build_scenario', 'derive_mu',
           'impose_case_rates', 'general_profiles', 'check_all_constraints']
