"""
Machine-readable and human-readable verification reports.

The JSON report carries no timestamps and sorts its keys, so identical
runs produce byte-identical files.

"""
import json
import math
from pathlib import Path

import jinja2

from .. import paths

__all__ = ["build_report", "dumps", "write_report", "render_summary"]


def _summary(results):
    suites = {}
    for result in results:
        row = suites.setdefault(
            result.suite, {"checks": 0, "failures": 0, "max_residual": 0.0}
        )
        row["checks"] += 1
        row["failures"] += not result.passed
        if math.isfinite(result.residual):
            row["max_residual"] = max(row["max_residual"], result.residual)
        else:
            row["max_residual"] = None
    return suites


def build_report(results):
    """
    Assemble the report dictionary.

    Args:
        results (list): :class:`CheckResult` instances.

    Returns:
        dict: Per-suite ``checks``, ``failures`` and ``max_residual``
        (``None`` once an exact check failed), the failure count and every
        result sorted by id.

    """
    results = sorted(results, key=lambda result: result.id)
    return {
        "suites": _summary(results),
        "checks": len(results),
        "failures": sum(1 for result in results if not result.passed),
        "results": [result.to_dict() for result in results],
    }


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2)


def write_report(report, file):
    """Write the JSON report to ``file``."""
    Path(file).write_text(dumps(report) + "\n", encoding="utf-8")


def _residual(value):
    if value is None:
        return "mismatch"
    return f"{value:.3e}"


def render_summary(report):
    """The summary table, rendered from ``summary.txt.j2``."""
    env = jinja2.Environment(
        loader=jinja2.FileSystemLoader(str(paths.TEMPLATES)),
        trim_blocks=True,
        lstrip_blocks=True,
        autoescape=False,
    )
    suites = {
        name: {
            "checks": row["checks"],
            "failures": row["failures"],
            "residual": _residual(row["max_residual"]),
        }
        for name, row in report["suites"].items()
    }
    failed = [
        result for result in report["results"] if not result["passed"]
    ]
    return env.get_template("summary.txt.j2").render(
        suites=suites,
        failures=report["failures"],
        checks=report["checks"],
        failed=failed,
    )
