"""
==========
coverideal
==========

Odd induced cycles, odd holes and perfection of finite simple graphs,
read off the associated primes of the square of the cover ideal.

"""

from ._version import __version__
from .cli import api as run

__name__ = 'coverideal'
