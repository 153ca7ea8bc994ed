from ncqosc.tab_validation.suites import SuiteResult, benchmark_families, sample_times, run_validation
from ncqosc.tab_validation.tab_validation import tab_validation, validation_report, write_report

__all__ = ['SuiteResult', 'benchmark_families', 'sample_times', 'run_validation',
           'tab_validation', 'validation_report', 'write_report']
