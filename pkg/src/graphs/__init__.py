"""
Multigraph model, predicates and file formats
"""
