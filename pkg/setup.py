"""
Setup script for GH Lab.

Enables installation with: pip install -e .
"""

from setuptools import setup, find_packages

setup(
    name="gh-lab",
    version="0.1.0",
    packages=find_packages(exclude=["tests*", "examples*"]),
    include_package_data=True,
    package_data={"gh_lab": ["templates/*.jinja"]},
    install_requires=[
        "numpy>=1.26.0",
        "scipy>=1.11.0",
        "networkx>=3.2",
        "pydantic>=2.12.4",
        "pydantic-settings>=2.12.0",
        "typer[all]>=0.9.0",
        "rich>=13.7.0",
        "jinja2>=3.1.2",
        "pyyaml>=6.0.1",
    ],
    entry_points={
        "console_scripts": [
            "gh-lab=gh_lab.cli.main:app",
        ],
    },
    python_requires=">=3.10",
)
