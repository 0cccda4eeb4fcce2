from helpers import SuiteRun


class TestHodge(SuiteRun):
    """Kernel dimensions of the weighted Laplacians are Betti numbers."""

    pass


class TestAlexander(SuiteRun):
    """Laplacian multiplicities of a complex and its Alexander dual."""

    max_n = 5
    full_max_n = 6


class TestAlexanderHomology(SuiteRun):
    full_max_n = 6
