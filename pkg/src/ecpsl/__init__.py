"""Exact model of the countable existentially closed p-semilattice."""

from ._kernel import BACKEND
from .limit import LimitElem
from .syntax import parse_elem, parse_term

__version__ = "0.1.0"
__all__ = ["BACKEND", "LimitElem", "parse_elem", "parse_term", "__version__"]
