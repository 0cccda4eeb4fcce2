"""
Command line interface for ``weightedhodge``.

The ``weightedhodge`` command reads complexes in the canonical JSON format
and prints spectra, bounds and Betti numbers, builds new complexes, and runs
the verification suites. Exit status is 0 on success, 1 when a complex,
parameter or config is rejected, and 2 when a verification check fails.

"""
from .main import echo, main


def entry_point():
    """Run the ``weightedhodge`` command group."""
    main(prog_name="weightedhodge")
