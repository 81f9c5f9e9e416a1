"""
Utility functions for the expander-maps package
"""
