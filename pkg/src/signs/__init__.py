"""
Sign algorithms and deciders
"""
