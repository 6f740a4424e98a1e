"""Exact root-system, Lie-algebra, and Witt-ring computations over Q and R."""
