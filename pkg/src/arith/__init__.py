"""
Exact rational scalars and univariate polynomials
"""
