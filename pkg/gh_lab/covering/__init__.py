"""
Coverings and covering radii of spheres and projective spaces.
"""

from gh_lab.covering.certificates import (
    CoveringBound,
    CoveringCertificate,
    build_certificate,
    lower_bound_from_certificate,
    projective_cover_bound,
)
from gh_lab.covering.net import symmetric_net
from gh_lab.covering.radius import covering_radius, measure_covering

__all__ = [
    "CoveringBound",
    "CoveringCertificate",
    "build_certificate",
    "covering_radius",
    "lower_bound_from_certificate",
    "measure_covering",
    "projective_cover_bound",
    "symmetric_net",
]
