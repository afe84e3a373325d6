"""Exact computations for fat points, powers of linear forms, and related invariants."""

__version__ = "0.1.0"
