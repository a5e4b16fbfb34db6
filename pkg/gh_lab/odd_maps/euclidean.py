"""
Conversions of geodesic bounds into bounds for unit spheres with the chord metric.
"""

import math
from typing import Tuple

from gh_lab.core.exceptions import ValidationError


def _check_angle(c: float) -> None:
    if not 0.0 <= c <= math.pi:
        raise ValidationError("Angle must lie in [0, π]", details={"c": c})


def euclidean_modulus_lower_bound(c: float) -> float:
    """2 sin(c/2): the chord-metric modulus bound matching a geodesic bound c."""
    _check_angle(c)
    return 2.0 * math.sin(c / 2.0)


def euclidean_gh_lower_bound(c: float) -> float:
    """2 − 2 cos(c/2): lower bound on 2·d_GH between Euclidean spheres."""
    _check_angle(c)
    return 2.0 - 2.0 * math.cos(c / 2.0)


def euclidean_bounds(c: float) -> Tuple[float, float]:
    """
    (modulus bound, GH bound) for the Euclidean metric from a geodesic bound c.

    Raises:
        ValidationError: If c is outside [0, π]
    """
    return euclidean_modulus_lower_bound(c), euclidean_gh_lower_bound(c)


__all__ = ["euclidean_modulus_lower_bound", "euclidean_gh_lower_bound", "euclidean_bounds"]
