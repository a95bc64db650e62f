"""Exact symmetric-function tools for permutation statistics."""
__version__ = "0.1.0"
