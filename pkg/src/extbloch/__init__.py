"""Exact extended-Bloch-group computations for number fields."""

__version__ = "0.1.0"
