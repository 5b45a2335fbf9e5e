"""Exact McKay/AR quiver computations for invariant rings of semilinear
matrix groups over cyclotomic and finite fields."""

__version__ = "0.1.0"
