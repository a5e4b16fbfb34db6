"""
Estimates for odd functions between spheres.
"""

from pathlib import Path
from typing import Optional

import typer

from gh_lab.cli.common import (
    config_option,
    execute,
    format_option,
    output_option,
    samples_option,
    seed_option,
)


def odd_map(
        construction: str = typer.Option(
            ..., "--construction",
            help="identity, equatorial_helmet, cone_vertex, linear_project_nearest or vr_pipeline",
        ),
        n: int = typer.Option(..., "--n", help="Target sphere dimension"),
        k: Optional[int] = typer.Option(None, "--k", help="Source dimension for linear_project_nearest"),
        epsilon: Optional[float] = typer.Option(None, "--r", help="Net scale for vr_pipeline"),
        eta: Optional[float] = typer.Option(None, "--eta", help="Ball radius for the discontinuity estimate"),
        samples: Optional[int] = samples_option(),
        seed: Optional[int] = seed_option(),
        output_format: str = format_option(),
        output: Optional[Path] = output_option(),
        config: Optional[Path] = config_option(),
) -> None:
    """
    Sample δ̂(f), dis(f) and the oddness check for a named construction.

    Example:
        gh-lab odd-map --construction cone_vertex --n 2 --samples 100000 --eta 0.05
    """
    execute("odd-map", config_path=config, output_path=output, output_format=output_format,
            seed=seed, construction=construction, n=n, k=k, r=epsilon, eta=eta, samples=samples)
