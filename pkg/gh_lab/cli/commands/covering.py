"""
Covering certificates on spheres and projective spaces.
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


def covering(
        construction: str = typer.Option(
            "greedy", "--construction", help="icosahedron, 600cell, simplex, grid or greedy"
        ),
        n: Optional[int] = typer.Option(None, "--n", help="Sphere dimension"),
        k: Optional[int] = typer.Option(None, "--k", help="Number of centers"),
        epsilon: Optional[float] = typer.Option(None, "--r", help="Target radius for greedy nets"),
        projective: bool = typer.Option(False, "--projective", help="Quotient to RP^n and report c_{n,k} >= π − 2·radius"),
        samples: Optional[int] = samples_option(),
        seed: Optional[int] = seed_option(),
        output_format: str = format_option(),
        output: Optional[Path] = output_option(),
        config: Optional[Path] = config_option(),
) -> None:
    """
    Build a covering certificate and re-check it on fresh samples.

    Examples:
        gh-lab covering --construction icosahedron --projective
        gh-lab covering --construction greedy --n 3 --k 40 --samples 100000
    """
    execute("covering", config_path=config, output_path=output, output_format=output_format,
            seed=seed, construction=construction, n=n, k=k, r=epsilon, samples=samples,
            projective=projective)
