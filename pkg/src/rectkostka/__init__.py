"""Generalized Kostka polynomials for sequences of rectangles: LR tableaux,
generalized charge, cyclage posets, embeddings, catabolism and transposition."""

__version__ = "0.1.0"
