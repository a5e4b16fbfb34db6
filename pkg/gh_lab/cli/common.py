"""
Options shared by every subcommand and the step from parsed options to `run`.
"""

from pathlib import Path
from typing import Any, Optional

import typer
from pydantic import ValidationError as PydanticValidationError

from gh_lab.cli.runner import report_error, run
from gh_lab.core.config import LabSettings, RunConfig, get_settings, set_settings
from gh_lab.core.console import console
from gh_lab.core.exceptions import GHLabError


def output_option() -> Any:
    return typer.Option(None, "--output", "-o", help="Write the artifact here instead of stdout")


def format_option() -> Any:
    return typer.Option("json", "--format", "-f", help="Output format: json, csv or markdown")


def config_option() -> Any:
    return typer.Option(None, "--config", "-c", help="Path to a gh-lab.yaml settings file")


def seed_option() -> Any:
    return typer.Option(None, "--seed", "-s", help="RNG seed (defaults to GH_LAB_SEED)")


def samples_option() -> Any:
    return typer.Option(None, "--samples", help="Sample count (defaults to GH_LAB_VALIDATION_SAMPLES)")


def execute(subcommand: str, config_path: Optional[Path] = None, output_path: Optional[Path] = None,
            output_format: str = "json", seed: Optional[int] = None, **params: Any) -> None:
    """
    Load settings, validate the invocation and run it.

    Raises:
        typer.Exit: With the run's exit code when it is not 0
    """
    try:
        if config_path is not None:
            set_settings(LabSettings.load(config_path))
        settings = get_settings()
        config = RunConfig(
            subcommand=subcommand,
            output_path=output_path,
            output_format=output_format,
            seed=settings.seed if seed is None else seed,
            **{key: value for key, value in params.items() if value is not None},
        )
    except GHLabError as e:
        report_error(e)
        raise typer.Exit(e.exit_code)
    except PydanticValidationError as e:
        console.print(f"[red]✗[/red] Invalid arguments for {subcommand}")
        for error in e.errors():
            location = ".".join(str(part) for part in error["loc"])
            console.print(f"  [dim]{location}: {error['msg']}[/dim]")
        raise typer.Exit(2)

    code = run(config)
    if code != 0:
        raise typer.Exit(code)


__all__ = [
    "output_option",
    "format_option",
    "config_option",
    "seed_option",
    "samples_option",
    "execute",
]
