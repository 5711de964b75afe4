"""Exact b-chromatic numbers for constructed graph families."""

__version__ = "0.1.0"
