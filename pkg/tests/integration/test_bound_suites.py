from helpers import SuiteRun


class TestGap(SuiteRun):
    """Gap bounds, with equality on the extremal family."""

    full_seeds = 200

    def check_results(self, results):
        properties = {result.property for result in results}
        assert {"extremal-gap", "extremal-equality"} <= properties


class TestLinkSum(SuiteRun):
    full_seeds = 200


class TestEigLower(SuiteRun):
    """Lower bounds on every eigenvalue from the graph Laplacian."""

    full_seeds = 200


class TestCohomUpper(SuiteRun):
    """Upper bounds on cohomology and the vanishing criteria."""

    full_seeds = 200


class TestSubcomplex(SuiteRun):
    full_seeds = 200
