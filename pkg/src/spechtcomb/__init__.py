"""Tableau and path combinatorics for two-column Specht modules."""

__version__ = "0.1.0"
