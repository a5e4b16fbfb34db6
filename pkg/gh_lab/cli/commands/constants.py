"""
Closed-form constants and known values of c_{n,k}.
"""

from pathlib import Path
from typing import Optional

import typer

from gh_lab.cli.common import config_option, execute, format_option, output_option


def constants(
        max_n: int = typer.Option(7, "--max-n", help="Largest n for r_n and t_n"),
        max_k: int = typer.Option(7, "--max-k", help="Largest k for known c_{n,k} facts"),
        output_format: str = format_option(),
        output: Optional[Path] = output_option(),
        config: Optional[Path] = config_option(),
) -> None:
    """Print r_n, t_n and the known facts about c_{n,k}."""
    execute("constants", config_path=config, output_path=output, output_format=output_format,
            max_n=max_n, max_k=max_k)
