"""
Bounds on Gromov–Hausdorff distances between spheres.
"""

from gh_lab.bounds.cells import (
    BoundsCell,
    KnownFact,
    LowerBound,
    c_lower,
    euclidean_cell,
    gh_cell,
    known_facts,
    prior_lower_bound,
)
from gh_lab.bounds.hemisphere import DistortionReport, HemisphereCorrespondence, verify_distortion
from gh_lab.bounds.table import BoundsTable, build_table

__all__ = [
    "BoundsCell",
    "KnownFact",
    "LowerBound",
    "c_lower",
    "euclidean_cell",
    "gh_cell",
    "known_facts",
    "prior_lower_bound",
    "DistortionReport",
    "HemisphereCorrespondence",
    "verify_distortion",
    "BoundsTable",
    "build_table",
]
