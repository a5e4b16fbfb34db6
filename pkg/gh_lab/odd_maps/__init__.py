"""
Odd functions between spheres and estimators for their distortion and
modulus of discontinuity.
"""

from gh_lab.odd_maps.estimators import DiscontinuityEstimate, estimate_distortion, estimate_modulus, modulus_at
from gh_lab.odd_maps.euclidean import euclidean_bounds, euclidean_gh_lower_bound, euclidean_modulus_lower_bound
from gh_lab.odd_maps.functions import (
    CONSTRUCTIONS,
    OddFunction,
    cone_vertex_function,
    equatorial_helmet,
    equatorial_inclusion_map,
    linear_project_nearest,
)
from gh_lab.odd_maps.registry import build_odd_function
from gh_lab.odd_maps.selection import (
    OddSelector,
    realization_to_function,
    vr_pipeline_function,
    vr_vertex_select,
)

__all__ = [
    "DiscontinuityEstimate",
    "estimate_distortion",
    "estimate_modulus",
    "euclidean_bounds",
    "euclidean_gh_lower_bound",
    "euclidean_modulus_lower_bound",
    "modulus_at",
    "CONSTRUCTIONS",
    "OddFunction",
    "cone_vertex_function",
    "equatorial_helmet",
    "equatorial_inclusion_map",
    "linear_project_nearest",
    "build_odd_function",
    "OddSelector",
    "realization_to_function",
    "vr_pipeline_function",
    "vr_vertex_select",
]
