"""
The table of bounds on 2·d_GH(S^n, S^k) for 1 <= n <= max_n, 1 <= k <= max_k.
"""

from typing import Any, Dict, List, Literal, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from gh_lab.bounds.cells import BoundsCell, c_lower, euclidean_cell, gh_cell
from gh_lab.core.config import get_settings
from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import ValidationError
from gh_lab.core.parallel import map_chunks
from gh_lab.covering.certificates import CoveringBound
from gh_lab.reporting.formats import to_csv, to_json
from gh_lab.reporting.renderer import ReportRenderer

logger = get_logger("bounds.table")

TableMetric = Literal["geodesic", "euclidean"]

CSV_COLUMNS = [
    "n",
    "k",
    "lower",
    "upper",
    "upper_open",
    "exact",
    "lower_label",
    "upper_label",
    "lower_provenance",
    "upper_provenance",
]


class BoundsTable(BaseModel):
    """Upper-triangular table of BoundsCell entries (cells with k >= n)."""

    model_config = ConfigDict(frozen=True)

    metric: TableMetric
    max_n: int = Field(ge=1)
    max_k: int = Field(ge=1)
    cells: List[BoundsCell]

    def cell(self, n: int, k: int) -> BoundsCell:
        for c in self.cells:
            if (c.n, c.k) == (n, k):
                return c
        raise ValidationError("No such cell in the table", details={"n": n, "k": k})

    def records(self) -> List[Dict[str, Any]]:
        return [c.model_dump() for c in self.cells]

    def grid(self) -> List[List[str]]:
        """Markdown entries row by row; cells below the diagonal are blank."""
        lookup = {(c.n, c.k): c.render() for c in self.cells}
        return [
            [str(n)] + [lookup.get((n, k), "") for k in range(1, self.max_k + 1)]
            for n in range(1, self.max_n + 1)
        ]

    def to_csv(self) -> str:
        return to_csv(self.records(), CSV_COLUMNS)

    def to_json(self) -> str:
        return to_json({"metric": self.metric, "max_n": self.max_n, "max_k": self.max_k, "cells": self.records()})

    def to_markdown(self, renderer: Optional[ReportRenderer] = None) -> str:
        renderer = renderer or ReportRenderer()
        symbols = [
            {"label": c.lower_label, "value": c.lower, "provenance": c.lower_provenance}
            for c in self.cells
            if self.metric == "geodesic" and c.lower_label.startswith("c_")
        ]
        return renderer.render(
            "bounds_table.md.jinja",
            metric=self.metric,
            header=["n \\ k"] + [str(k) for k in range(1, self.max_k + 1)],
            rows=self.grid(),
            symbols=symbols,
            digits=get_settings().json_digits,
        )

    def render(self, output_format: str) -> str:
        if output_format == "csv":
            return self.to_csv()
        if output_format == "json":
            return self.to_json()
        if output_format == "markdown":
            return self.to_markdown()
        raise ValidationError(f"Unknown output format: {output_format}")


def build_table(max_n: int = 7, max_k: int = 7, metric: TableMetric = "geodesic",
                covering_bounds: Optional[Sequence[CoveringBound]] = None,
                threads: Optional[int] = None) -> BoundsTable:
    """
    Compute every cell with 1 <= n <= k, n <= max_n, k <= max_k.

    Raises:
        ValidationError: If max_n or max_k is below 1
    """
    if max_n < 1 or max_k < 1:
        raise ValidationError("Table dimensions must be >= 1", details={"max_n": max_n, "max_k": max_k})
    if covering_bounds is not None:
        covering_bounds = list(covering_bounds)
    else:
        # warm the default registry once so workers share it
        c_lower(1, max_k)
    make = gh_cell if metric == "geodesic" else euclidean_cell
    positions = [(n, k) for n in range(1, max_n + 1) for k in range(n, max_k + 1)]
    cells = map_chunks(lambda nk: make(nk[0], nk[1], covering_bounds), positions, threads=threads)
    logger.debug("built %s table with %d cells", metric, len(cells))
    return BoundsTable(metric=metric, max_n=max_n, max_k=max_k, cells=cells)


__all__ = ["CSV_COLUMNS", "BoundsTable", "build_table"]
