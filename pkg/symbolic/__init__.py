"""
Exact symbolic layer: polynomials, four-vectors, gamma matrices, gauge fields and Lagrangians.
"""