"""Subcommands of the gh-lab CLI, one module each."""
