"""Symmetric low-regularity integration of the Klein-Gordon equation on the torus."""

__version__ = "0.1.0"
