"""
Region classification of the (x,y) plane
"""
