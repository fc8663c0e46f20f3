"""Exact reconstruction and certification of the Harborth graph coordinate
minimal polynomials."""

__version__ = "0.1.0"
