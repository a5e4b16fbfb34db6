"""
Exact Gromov–Hausdorff distance between two small distance matrices.
"""

from pathlib import Path
from typing import Optional

import typer

from gh_lab.cli.common import config_option, execute, format_option, output_option


def oracle_gh(
        x: Path = typer.Option(..., "--x", help="Distance-matrix file for X"),
        y: Path = typer.Option(..., "--y", help="Distance-matrix file for Y"),
        budget: Optional[int] = typer.Option(None, "--budget", help="Cap on |X|·|Y| (defaults to GH_LAB_GH_MAX_CELLS)"),
        output_format: str = format_option(),
        output: Optional[Path] = output_option(),
        config: Optional[Path] = config_option(),
) -> None:
    """
    Compute d_GH(X, Y) and an optimal correspondence by exhaustive search.
    """
    execute("oracle-gh", config_path=config, output_path=output, output_format=output_format,
            budget=budget, inputs={"x": x, "y": y})
