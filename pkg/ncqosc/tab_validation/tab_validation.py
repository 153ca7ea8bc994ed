import json
import os
from dataclasses import asdict
from math import isfinite
from typing import Sequence

import pandas as pd

from ncqosc.tab_validation.suites import SuiteResult


def tab_validation(results: Sequence[SuiteResult]) -> pd.DataFrame:
    """
    Generate the validation table, one row per suite.

    Parameters
    ----------
    results : sequence of SuiteResult
        Output of :func:`ncqosc.tab_validation.run_validation`.

    Returns
    -------
    pandas.DataFrame
        Columns ``passed``, ``worst``, ``tolerance`` and ``detail``,
        indexed by suite name.

    Raises
    ------
    TypeError
        If an entry is not a SuiteResult.

    Examples
    --------
    >>> table = tab_validation([SuiteResult("demo", True, 1e-16, 1e-14)])  # doctest: +ELLIPSIS
    Validation Report
    ...
    >>> bool(table.loc["demo", "passed"])
    True
    """
    for result in results:
        if not isinstance(result, SuiteResult):
            raise TypeError("Each entry must be a SuiteResult (from run_validation()).")

    table = pd.DataFrame({
        "passed": [result.passed for result in results],
        "worst": [result.worst for result in results],
        "tolerance": [result.tolerance for result in results],
        "detail": [result.detail for result in results],
    })
    table.index = [result.name for result in results]

    print("Validation Report")
    print(table)
    return table


def validation_report(results: Sequence[SuiteResult]) -> dict:
    """Machine-readable pass/fail summary; non-finite values become None."""
    suites = []
    for result in results:
        entry = asdict(result)
        entry["worst"] = result.worst if isfinite(result.worst) else None
        suites.append(entry)
    return {"passed": all(result.passed for result in results), "suites": suites}


def write_report(results: Sequence[SuiteResult], path) -> str:
    path = os.fspath(path)
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(validation_report(results), handle, indent=2, sort_keys=True)
        handle.write("\n")
    return path
