"""Exact-arithmetic toolkit for decomposing and gluing Artinian monomial
algebras and deciding the weak and strong Lefschetz properties."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
