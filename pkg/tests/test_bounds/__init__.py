"""Tests for Gromov–Hausdorff bounds."""
