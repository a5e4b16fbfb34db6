"""
Core utilities for GH Lab.

This module contains core functionality including:
- Configuration management
- Console and logging setup
- Common exceptions
- Seeded sampling and chunked parallel execution
"""

from gh_lab.core.console import console, get_logger

__all__ = [
    "console",
    "get_logger",
]
