"""
Sphere and projective-space geometry.

Provides:
- SpherePoint / ProjectivePoint with geodesic, chord and quotient metrics
- Closed-form constants r_n and t_n
- Inscribed regular simplex, icosahedron and 600-cell vertex sets
- The equatorial projection tau
- The point-set file format
"""

from gh_lab.geometry.constants import r_n, t_n
from gh_lab.geometry.points import (
    ProjectivePoint,
    SpherePoint,
    euclidean_distance,
    geodesic_distance,
    projective_distance,
)
from gh_lab.geometry.polytopes import (
    SimplexFrame,
    cell600_vertices,
    facet_membership,
    icosahedron_vertices,
    inscribed_simplex,
    polygon_vertices,
)
from gh_lab.geometry.projection import tau

__all__ = [
    "SpherePoint",
    "ProjectivePoint",
    "geodesic_distance",
    "euclidean_distance",
    "projective_distance",
    "r_n",
    "t_n",
    "SimplexFrame",
    "inscribed_simplex",
    "facet_membership",
    "icosahedron_vertices",
    "cell600_vertices",
    "polygon_vertices",
    "tau",
]
