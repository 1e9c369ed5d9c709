"""Fully split lacunary polynomials over prime fields: exact census and checks."""

__version__ = "0.1.0"
