"""Exact integer spectra and structure checks for simplicial rook graphs."""

__version__ = "0.1.0"
