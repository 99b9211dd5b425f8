"""
Weight implementations: shifts, gadgets and constructions
"""
