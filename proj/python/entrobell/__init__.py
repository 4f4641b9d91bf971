"""Entropy Venn diagrams and Bell-inequality checks for dichotomic variables.

Thin wrapper around the compiled _core module; see the individual function
docstrings for the calculus conventions (entropies in bits, outcomes +/-1).
"""

from ._core import *  # noqa: F401,F403

__version__ = "1.0.0"
