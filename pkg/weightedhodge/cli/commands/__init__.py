"""
Implements the subcommands of the ``weightedhodge`` command line tool.

"""
from .betti import betti
from .bounds import bounds
from .construct import (
    construct_clique,
    construct_complement,
    construct_dual,
    construct_extremal,
    construct_fixture,
    construct_independence,
    construct_join,
    construct_random,
    construct_skeleton,
    construct_star,
    write_text,
)
from .info import info
from .spectrum import spectrum
from .verify import verify
