"""
Main CLI entry point for GH Lab.

This module wires the subcommands into one Typer application.
"""

from pathlib import Path

import typer

from gh_lab import __version__
from gh_lab.cli.commands import constants, covering, homology, odd_map, oracle, table, theorem
from gh_lab.core.config import get_settings
from gh_lab.core.console import configure_logging, console

# Initialize Typer app
app = typer.Typer(
    name="gh-lab",
    help="Certified bounds on Gromov–Hausdorff distances between spheres",
    add_completion=False,
    rich_markup_mode="rich",
    no_args_is_help=True,
)


def version_callback(value: bool) -> None:
    """Display version information."""
    if value:
        console.print(f"[bold cyan]GH Lab[/bold cyan] version [green]{__version__}[/green]")
        raise typer.Exit()


@app.callback()
def callback(
        version: bool = typer.Option(
            None,
            "--version",
            "-v",
            help="Show version information",
            callback=version_callback,
            is_eager=True,
        ),
        verbose: bool = typer.Option(False, "--verbose", help="Log progress at DEBUG level"),
) -> None:
    """
    GH Lab - Gromov–Hausdorff distances between spheres.

    [bold cyan]Subcommands:[/bold cyan]
    • table: lower and upper bounds on 2·d_GH(S^n, S^k)
    • verify-theorem1: sampled distortion of the hemisphere correspondence
    • covering: covering certificates on S^n and RP^n
    • vr-homology: Betti numbers of Vietoris–Rips complexes
    • oracle-gh: exact d_GH of tiny finite metric spaces
    • odd-map: discontinuity and distortion estimates for odd functions
    • constants: r_n, t_n and known values of c_{n,k}

    [bold yellow]Quick Start:[/bold yellow]
        gh-lab table --max-n 7 --max-k 7 --format markdown
        gh-lab verify-theorem1 --n 2 --samples 100000 --seed 7
    """
    configure_logging(verbose)


@app.command()
def info() -> None:
    """
    Display information about the GH Lab installation and active settings.
    """
    from rich.table import Table
    import sys
    import platform

    settings = get_settings()

    info_table = Table(title="GH Lab Installation Info", show_header=False)
    info_table.add_column("Property", style="cyan", no_wrap=True)
    info_table.add_column("Value", style="green")

    info_table.add_row("Version", __version__)
    info_table.add_row("Python Version", f"{sys.version_info.major}.{sys.version_info.minor}.{sys.version_info.micro}")
    info_table.add_row("Platform", platform.system())

    import gh_lab
    info_table.add_row("Install Path", str(Path(gh_lab.__file__).parent.parent))
    info_table.add_row("Threads", str(settings.threads))
    info_table.add_row("Seed", str(settings.seed))
    info_table.add_row("Simplex Budget", str(settings.simplex_budget))

    console.print(info_table)


# Register subcommands
app.command(name="table")(table.table)
app.command(name="verify-theorem1")(theorem.verify_theorem1)
app.command(name="covering")(covering.covering)
app.command(name="vr-homology")(homology.vr_homology)
app.command(name="oracle-gh")(oracle.oracle_gh)
app.command(name="odd-map")(odd_map.odd_map)
app.command(name="constants")(constants.constants)

if __name__ == "__main__":
    app()
