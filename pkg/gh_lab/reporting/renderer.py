"""
Jinja2 rendering of markdown reports.
"""

from pathlib import Path
from typing import Any, Optional

from jinja2 import Environment, FileSystemLoader, select_autoescape

TEMPLATES_DIR = Path(__file__).parent.parent / "templates"


class ReportRenderer:
    """
    Loads templates from the package's templates directory.

    Args:
        templates_dir: Override for the template search path
    """

    def __init__(self, templates_dir: Optional[Path] = None):
        self.templates_dir = templates_dir or TEMPLATES_DIR
        self.jinja_env = Environment(
            loader=FileSystemLoader(str(self.templates_dir)),
            autoescape=select_autoescape(["html", "xml"]),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )
        self._register_filters()

    def _register_filters(self) -> None:
        self.jinja_env.filters["sig"] = self._significant

    @staticmethod
    def _significant(value: float, digits: int = 12) -> str:
        """Format a number with `digits` significant digits."""
        return f"{float(value):.{digits}g}"

    def render(self, template_name: str, **context: Any) -> str:
        return self.jinja_env.get_template(template_name).render(**context)


__all__ = ["TEMPLATES_DIR", "ReportRenderer"]
