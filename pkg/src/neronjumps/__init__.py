"""Neron model jumps, d-jumps, conductors and motivic zeta functions."""

__version__ = "0.1.0"
