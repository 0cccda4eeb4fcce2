from helpers import SuiteRun


class TestUnion(SuiteRun):
    """Nonzero spectrum of the full Laplacian splits into up and down."""

    pass


class TestDownUp(SuiteRun):
    pass


class TestDuality(SuiteRun):
    """Down spectra of a complex and its star complex pair up."""

    pass


class TestCompleteSkeleton(SuiteRun):
    """Closed-form spectra of complete skeleta, with exact
    multiplicities."""

    full_seeds = 5

    def check_results(self, results):
        properties = {result.property for result in results}
        assert properties == {
            "complete-skeleton-spectrum",
            "complete-skeleton-multiplicity",
        }


class TestComplement(SuiteRun):
    pass


class TestCommute(SuiteRun):
    """The three extended up-Laplacians add up exactly and commute."""

    pass


class TestMaxEigen(SuiteRun):
    def check_results(self, results):
        # The fixtures run on seed 0; CP(4) is the only one on 8 vertices
        assert any(
            result.property == "max-eigenvalue-multiplicity"
            and result.instance["n"] == 8
            for result in results
        )


class TestJoin(SuiteRun):
    """Spectra of joins compose from the spectra of the blocks."""

    max_n = 4


class TestCompound(SuiteRun):
    full_seeds = 100
    full_max_n = 6


class TestInterlacing(SuiteRun):
    pass


class TestEigvecSupport(SuiteRun):
    pass


class TestIdentities(SuiteRun):
    """Closed forms against products, exactly."""

    pass


class TestGershgorin(SuiteRun):
    pass
