"""
Output formats for tables and reports.
"""

from gh_lab.reporting.formats import round_floats, to_csv, to_json
from gh_lab.reporting.renderer import ReportRenderer

__all__ = ["round_floats", "to_csv", "to_json", "ReportRenderer"]
