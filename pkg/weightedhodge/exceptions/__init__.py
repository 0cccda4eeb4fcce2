"""
Defines custom exceptions for the ``weightedhodge`` package.

"""

from .base import *
from .complex import *
from .input import *
from .linalg import *
from .verify import *
