"""Exact computation of minimal inequality lists for moment cones."""

__version__ = "0.1.0"
