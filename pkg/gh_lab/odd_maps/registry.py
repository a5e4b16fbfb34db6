"""
Construction tags for the odd-map subcommand.
"""

from typing import Optional

from gh_lab.core.exceptions import ValidationError
from gh_lab.odd_maps.functions import (
    CONSTRUCTIONS,
    OddFunction,
    cone_vertex_function,
    equatorial_helmet,
    linear_project_nearest,
)
from gh_lab.odd_maps.selection import vr_pipeline_function

DEFAULT_PIPELINE_EPSILON = 0.3


def build_odd_function(construction: str, n: int, k: Optional[int] = None,
                       epsilon: Optional[float] = None, seed: Optional[int] = None) -> OddFunction:
    """
    Build the odd function named by a construction tag.

    Args:
        construction: One of CONSTRUCTIONS
        n: Target sphere dimension
        k: Source sphere dimension (linear_project_nearest only; defaults to n+1)
        epsilon: Pipeline scale (vr_pipeline only)
        seed: Net seed (vr_pipeline only)

    Raises:
        ValidationError: On an unknown tag
    """
    if construction == "equatorial_helmet":
        return equatorial_helmet(n)
    if construction == "cone_vertex":
        return cone_vertex_function(n)
    if construction == "linear_project_nearest":
        return linear_project_nearest(k if k is not None else n + 1, n)
    if construction == "identity":
        return OddFunction.identity(n)
    if construction == "vr_pipeline":
        return vr_pipeline_function(n, epsilon if epsilon is not None else DEFAULT_PIPELINE_EPSILON, seed=seed)
    raise ValidationError(f"Unknown odd-map construction: {construction}",
                          details={"known": list(CONSTRUCTIONS)})


__all__ = ["DEFAULT_PIPELINE_EPSILON", "build_odd_function"]
