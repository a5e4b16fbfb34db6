"""Tests for finite metric spaces."""
