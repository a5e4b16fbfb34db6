"""Tests for simplicial complexes."""
