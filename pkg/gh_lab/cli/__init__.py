"""
Command-line interface for GH Lab.
"""
