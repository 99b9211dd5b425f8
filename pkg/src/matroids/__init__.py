"""
Binary matroids over GF(2)
"""
