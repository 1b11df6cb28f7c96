"""Exact computations for Lie algebras with contact and CR structures."""

__version__ = "0.1.0"
