from ncqosc.dataset.load_data import (
    ScenarioConfig, get_scenario_names, config_hash, parse_config, load_scenario,
)

__all__ = ['ScenarioConfig', 'get_scenario_names', 'config_hash', 'parse_config', 'load_scenario']
