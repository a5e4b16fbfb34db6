"""
Homology of Vietoris–Rips complexes of point sets.
"""

from pathlib import Path
from typing import Optional

import typer

from gh_lab.cli.common import config_option, execute, format_option, output_option


def vr_homology(
        points: Path = typer.Option(..., "--points", help="Point-set file"),
        r: float = typer.Option(..., "--r", help="Scale in radians (or chord length for euclidean)"),
        max_dim: int = typer.Option(2, "--max-dim", help="Highest homology degree"),
        metric: str = typer.Option("geodesic", "--metric", help="geodesic or euclidean"),
        budget: Optional[int] = typer.Option(None, "--budget", help="Simplex budget (defaults to GH_LAB_SIMPLEX_BUDGET)"),
        export: Optional[Path] = typer.Option(None, "--export", help="Write the simplex list here"),
        output_format: str = format_option(),
        output: Optional[Path] = output_option(),
        config: Optional[Path] = config_option(),
) -> None:
    """
    Betti numbers over the two-element field of VR(points; r).

    Example:
        gh-lab vr-homology --points 11gon.txt --r 2.2848 --max-dim 4
    """
    inputs = {"points": points}
    if export is not None:
        inputs["export"] = export
    execute("vr-homology", config_path=config, output_path=output, output_format=output_format,
            r=r, max_dim=max_dim, metric=metric, budget=budget, inputs=inputs)
