from ... import exceptions
from ...logging import get_logger
from ...verify import (
    SUITES,
    build_report,
    render_summary,
    run_all,
    run_suite,
    write_report,
)


def verify(suite, seeds=None, max_n=None, seed=0, workers=None, json=None):
    """
    Run one suite (or ``all``) and build its report.

    Returns:
        tuple: The rendered summary and the number of failed checks.

    """
    if suite != "all" and suite not in SUITES:
        raise exceptions.UnknownSuite(suite, ["all"] + sorted(SUITES))
    options = dict(seeds=seeds, max_n=max_n, workers=workers, first_seed=seed)
    if suite == "all":
        results = run_all(**options)
    else:
        results = run_suite(suite, **options)
    report = build_report(results)
    if json is not None:
        write_report(report, json)
        get_logger().info(f"Wrote the verification report to `{json}`.")
    get_logger().info(
        f"verify: {report['checks']} check(s), "
        f"{report['failures']} failure(s)"
    )
    return render_summary(report), report["failures"]
