"""Exact U_q(sl(2)) representation theory and its crystal (q -> 0) limit."""

from .halfint import HalfInt, half

__version__ = "0.1.0"

__all__ = ["HalfInt", "half", "__version__"]
