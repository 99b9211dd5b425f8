"""
User interfaces (CLI) module
"""
