"""Tests for sphere geometry."""
