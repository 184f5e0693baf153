"""Exact algebra toolkit for W(1+infinity)^+ and the CoHA of points on the plane."""

__version__ = "0.1.0"
