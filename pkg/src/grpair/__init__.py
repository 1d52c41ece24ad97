"""Exact computations around the pair X_g = Gr(2,5) ∩ g·Gr(2,5), Y_g = Gr(2,5) ∩ g⁻ᵗ·Gr(2,5)."""

__version__ = "0.1.0"
