"""
Exact random-cluster evaluation and its specializations
"""
