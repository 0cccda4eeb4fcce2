"""
Vertex-weighted simplicial complexes, their Hodge Laplacians and spectra.

The library side builds complexes (:doc:`weightedhodge.complex`), assembles
the weighted operators exactly over the rationals
(:doc:`weightedhodge.operators`), computes spectra
(:doc:`weightedhodge.spectra`), exact Betti numbers
(:doc:`weightedhodge.homology`) and spectral bounds
(:doc:`weightedhodge.bounds`). The :doc:`weightedhodge.verify` package binds
the spectral identities to seeded property suites, and
:doc:`weightedhodge.cli` exposes everything on the command line.

"""
try:
    from ._weightedhodge_version import __version__
except ImportError:
    __version__ = "unknown"
