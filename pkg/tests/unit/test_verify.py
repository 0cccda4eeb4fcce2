import json
import math

import pytest

from weightedhodge import exceptions
from weightedhodge.complex import from_facets
from weightedhodge.operators import WeightedComplex
from weightedhodge.verify import (
    COVERAGE,
    SUITES,
    Case,
    CheckResult,
    build_report,
    digest,
    random_weighted,
    render_summary,
    run_case,
    run_suite,
    suite_rng,
    write_report,
)


def test_every_suite_is_covered():
    assert set(COVERAGE.values()) == set(SUITES)


def test_check_result():
    ok = CheckResult("gap", "gap-bound", 3, 7, {"n": 4}, 1e-12, 1e-8, {})
    assert ok.passed
    assert ok.id == "gap/000003/0007"
    assert ok.witness is None
    bad = CheckResult("gap", "gap-bound", 3, 8, {}, math.inf, 0.0, {"x": 1})
    assert not bad.passed
    assert bad.witness == {"x": 1}
    assert bad.to_dict()["residual"] is None


def test_case_records_instances():
    W = WeightedComplex(from_facets("ab", [["a", "b"]]), [1, 2])
    case = Case("union", 5, suite_rng("union", 5), 4)
    case.require("nonzero-union", True, W=W, k=0)
    case.require("nonzero-union", False)
    first, second = case.results
    assert first.passed and not second.passed
    assert first.instance == {"k": 0, "n": 2, "dim": 1, "weights": digest(W)}
    assert [r.index for r in case.results] == [0, 1]


def test_suite_rng_replays():
    a = random_weighted(suite_rng("gap", 11), 6)
    b = random_weighted(suite_rng("gap", 11), 6)
    assert a == b
    assert digest(a) == digest(b)
    assert suite_rng("gap", 11).random() != suite_rng("hodge", 11).random()


def test_digest_tracks_weights():
    X = from_facets("ab", [["a", "b"]])
    assert digest(WeightedComplex(X)) != digest(WeightedComplex(X, [1, 2]))


@pytest.mark.parametrize("name", ["union", "identities", "compound"])
def test_run_case_properties_are_covered(name):
    results = run_case(name, 0, 4)
    assert results
    for result in results:
        assert COVERAGE[result.property] == name
        assert result.passed, result.to_dict()


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_eigvec_support_checks_a_disconnected_complex(seed):
    results = run_case("eigvec-support", seed, 6)
    coupled = [r for r in results if r.property.endswith("-coupled")]
    assert coupled and coupled[0].instance["k"] == 0
    for result in results:
        assert result.passed, result.to_dict()


def test_run_case_replays():
    first = [r.to_dict() for r in run_case("hodge", 2, 4)]
    second = [r.to_dict() for r in run_case("hodge", 2, 4)]
    assert first == second


def test_unknown_suite():
    with pytest.raises(exceptions.UnknownSuite):
        run_suite("no-such-suite", seeds=1)


def test_report(tmp_path):
    results = [
        CheckResult("union", "nonzero-union", 0, 0, {"n": 3}, 0.0, 1e-8),
        CheckResult(
            "gap", "gap-bound", 1, 0, {"n": 4, "k": 0}, 2.0, 1e-8, {"g": 1}
        ),
    ]
    report = build_report(results)
    assert report["checks"] == 2
    assert report["failures"] == 1
    assert [r["id"] for r in report["results"]] == [
        "gap/000001/0000",
        "union/000000/0000",
    ]
    assert report["suites"]["gap"]["max_residual"] == 2.0

    summary = render_summary(report)
    assert "1 check(s) failed" in summary
    assert "`gap/000001/0000` gap-bound (n=4, k=0)" in summary

    file = tmp_path / "report.json"
    write_report(report, file)
    assert json.loads(file.read_text()) == report


def test_summary_of_passing_run():
    report = build_report(run_suite("union", seeds=2, max_n=4))
    assert report["failures"] == 0
    summary = render_summary(report)
    assert f"All {report['checks']} check(s) passed." in summary
    assert summary.splitlines()[0].startswith("suite")


def test_mismatch_is_reported():
    results = [
        CheckResult("hodge", "hodge", 0, 0, {}, math.inf, 0.0),
    ]
    report = build_report(results)
    assert report["suites"]["hodge"]["max_residual"] is None
    assert "mismatch" in render_summary(report)
