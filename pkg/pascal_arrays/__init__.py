"""
Pascal arrays for rooted graphs and the Catalan families attached to them
"""

__version__ = "0.1.0"
