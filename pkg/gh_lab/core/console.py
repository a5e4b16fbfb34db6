"""
Shared Rich console and logging for consistent CLI output across the application.

Artifacts (JSON, CSV, markdown) are written to stdout or a file by the CLI;
everything human-facing goes through this stderr console.
"""

import logging

from rich.console import Console
from rich.logging import RichHandler

# Global console instance
console = Console(stderr=True)

_ROOT_LOGGER = "gh_lab"
_configured = False


def configure_logging(verbose: bool = False) -> None:
    """Attach a Rich handler to the package logger (idempotent)."""
    global _configured

    root = logging.getLogger(_ROOT_LOGGER)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)

    if not _configured:
        handler = RichHandler(console=console, show_path=False, rich_tracebacks=True)
        handler.setFormatter(logging.Formatter("%(message)s"))
        root.addHandler(handler)
        root.propagate = False
        _configured = True


def get_logger(name: str) -> logging.Logger:
    """Return a logger under the package namespace."""
    if not name.startswith(_ROOT_LOGGER):
        name = f"{_ROOT_LOGGER}.{name}"
    return logging.getLogger(name)


__all__ = ["console", "configure_logging", "get_logger"]
