"""Executable checks of the plethystic formulas for descent statistics."""
from .registry import (FORMULAS, SUITE_NAMES, SuiteConfig, evaluate_formula, formula_ids,
                       run_suite, suite_checks)
from .report import CheckFailed, VerifyReport, run_check

__all__ = [
    "FORMULAS", "SUITE_NAMES", "SuiteConfig", "evaluate_formula", "formula_ids", "run_suite",
    "suite_checks", "CheckFailed", "VerifyReport", "run_check",
]
