"""Tests for coverings."""
