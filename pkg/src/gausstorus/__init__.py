"""Exact verification of Gaussian braid representations on quantum tori."""

__version__ = "0.1.0"
