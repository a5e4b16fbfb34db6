"""
Bounds table command.
"""

from pathlib import Path
from typing import Optional

import typer

from gh_lab.cli.common import config_option, execute, format_option, output_option


def table(
        max_n: int = typer.Option(7, "--max-n", help="Largest source dimension n"),
        max_k: int = typer.Option(7, "--max-k", help="Largest target dimension k"),
        metric: str = typer.Option("geodesic", "--metric", help="geodesic or euclidean"),
        output_format: str = format_option(),
        output: Optional[Path] = output_option(),
        config: Optional[Path] = config_option(),
) -> None:
    """
    Tabulate lower and upper bounds on 2·d_GH(S^n, S^k).

    Examples:
        gh-lab table --max-n 7 --max-k 7 --format markdown
        gh-lab table --metric euclidean --format csv -o euclidean.csv
    """
    execute("table", config_path=config, output_path=output, output_format=output_format,
            max_n=max_n, max_k=max_k, metric=metric)
