import logging
import re
from pathlib import Path

import pytest

from weightedhodge.logging import TerminalHandler, get_logger
from weightedhodge.verify import (
    COVERAGE,
    build_report,
    render_summary,
    run_suite,
    write_report,
)

# Folder where reports of failed runs are kept
SANDBOX = Path(__file__).absolute().parents[1] / "sandbox"


class SuiteRun:
    """
    Base class for verification suite tests.

    """

    # Editable class settings
    seeds = 3
    max_n = 5
    first_seed = 0
    workers = 1
    full_seeds = 50
    full_max_n = 7

    @property
    def suite(self):
        # Name the suite after the subclass (TestEigLower -> eig-lower)
        name = re.sub(r"(?<!^)(?=[A-Z])", "-", self.__class__.__name__)
        return name.lower().removeprefix("test-")

    def disable_logging(self):
        """Disable weightedhodge screen output."""
        for handler in get_logger().handlers:
            if isinstance(handler, TerminalHandler):
                handler.setLevel(logging.ERROR)

    def check_results(self, results):
        """Subclass me to run extra checks on the results."""
        pass

    def run(self, seeds, max_n):
        self.disable_logging()
        results = run_suite(
            self.suite,
            seeds=seeds,
            max_n=max_n,
            workers=self.workers,
            first_seed=self.first_seed,
        )
        report = build_report(results)
        if report["failures"]:
            SANDBOX.mkdir(exist_ok=True)
            write_report(report, SANDBOX / f"{self.suite}.json")
        assert report["failures"] == 0, render_summary(report)
        return results

    def test_suite(self):
        """Run the suite on a few small instances."""
        results = self.run(self.seeds, self.max_n)
        assert results
        for result in results:
            assert COVERAGE[result.property] == self.suite
        self.check_results(results)

    def test_replay(self):
        """The same seeds give the same report."""
        self.disable_logging()
        first = run_suite(self.suite, seeds=1, max_n=self.max_n)
        second = run_suite(self.suite, seeds=1, max_n=self.max_n)
        assert [r.to_dict() for r in first] == [r.to_dict() for r in second]

    @pytest.mark.slow
    def test_full(self):
        """Run the suite at full size."""
        self.run(self.full_seeds, self.full_max_n)
