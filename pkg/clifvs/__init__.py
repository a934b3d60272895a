"""Exact Clifford algebra inverses and characteristic polynomials via Faddeev-LeVerrier-Souriau."""

__version__ = "0.1.0"
