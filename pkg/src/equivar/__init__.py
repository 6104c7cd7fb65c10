"""Exact computations with finite groups, Mackey functors, Burnside rings,
orbital categories and finite-field Galois descent."""

__version__ = "0.1.0"
