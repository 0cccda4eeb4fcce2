"""
Seeded property suites for the spectral identities and bounds.

"""
from .instances import digest, random_weighted, suite_rng
from .report import build_report, render_summary, write_report
from .results import Case, CheckResult
from .runner import run_all, run_case, run_suite
from .suites import COVERAGE, SUITES
