"""Pair correlation of zeros of the derivative of the Riemann xi-function."""

__version__ = "0.1.0"
