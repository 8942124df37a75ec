"""Frobenius classes and local conditions for genus-2 curves at 2 and 3."""

__version__ = "0.1.0"
