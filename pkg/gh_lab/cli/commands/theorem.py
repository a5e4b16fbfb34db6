"""
Sampled check of the 2π/3 bound for the hemisphere correspondence between S^{n+1} and S^n.
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


def verify_theorem1(
        n: int = typer.Option(..., "--n", help="Equator dimension n (compares S^{n+1} with S^n)"),
        samples: Optional[int] = samples_option(),
        seed: Optional[int] = seed_option(),
        output_format: str = format_option(),
        output: Optional[Path] = output_option(),
        config: Optional[Path] = config_option(),
) -> None:
    """
    Measure the distortion of the explicit hemisphere correspondence.

    The run passes when the sampled maximum stays below 2π/3.

    Example:
        gh-lab verify-theorem1 --n 2 --samples 100000 --seed 7
    """
    execute("verify-theorem1", config_path=config, output_path=output, output_format=output_format,
            seed=seed, n=n, samples=samples)
