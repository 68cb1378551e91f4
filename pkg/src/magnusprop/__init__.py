"""Finite and nilpotent group computations around the Magnus property."""

__version__ = "0.1.0"
