"""Tests for odd maps and estimators."""
