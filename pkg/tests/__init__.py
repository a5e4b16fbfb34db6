"""
Tests for GH Lab.

Unit tests per package, plus slow sampling checks marked `slow`.
"""
