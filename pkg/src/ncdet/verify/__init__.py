"""Seeded verification battery: samplers, oracles, invariant suites and reports."""

from ncdet.verify.report import Counterexample, SuiteResult, VerifyReport
from ncdet.verify.suites import SCALES, SUITES, run_suites, suite_names

__all__ = [
    "Counterexample",
    "SuiteResult",
    "VerifyReport",
    "SCALES",
    "SUITES",
    "run_suites",
    "suite_names",
]
