"""Exact toric and quiver machinery for cyclic quotient surface singularities."""

__version__ = "0.1.0"
