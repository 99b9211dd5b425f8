"""
Sign-oracle reduction to minimum cut counting
"""
