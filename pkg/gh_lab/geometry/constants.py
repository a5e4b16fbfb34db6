"""
Closed-form constants.

r_n is the geodesic distance between two vertices of the regular simplex
inscribed in S^n; it is the lower bound r_n <= 2·d_GH(S^n, S^{n+1}).
t_n is the geodesic diameter of one facet of that simplex projected radially
onto the sphere. It gives the older upper bound 2·d_GH(S^n, S^{n+1}) <= t_n,
which the hemisphere correspondence improves to 2π/3.
"""

import math

from gh_lab.core.exceptions import ValidationError

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0

# Covering radii of the two exceptional centrally symmetric sets.
ICOSAHEDRON_COVER_RADIUS = math.acos(math.sqrt((5.0 + 2.0 * math.sqrt(5.0)) / 15.0))
CELL600_COVER_RADIUS = math.acos((1.0 + math.sqrt(5.0)) / (2.0 * math.sqrt(3.0)))


def _check_dimension(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValidationError("Dimension must be an integer >= 1", details={"n": n})


def r_n(n: int) -> float:
    """
    r_n = arccos(−1/(n+1)).

    Args:
        n: Sphere dimension, n >= 1

    Returns:
        Angle in (π/2, 2π/3]; r_1 = 2π/3 and r_n decreases to π/2

    Raises:
        ValidationError: If n < 1
    """
    _check_dimension(n)
    return math.acos(-1.0 / (n + 1))


def t_n(n: int) -> float:
    """
    t_n = arccos(−(n+1)/(n+3)) for odd n, arccos(−√(n/(n+4))) for even n.

    Raises:
        ValidationError: If n < 1
    """
    _check_dimension(n)
    if n % 2 == 1:
        return math.acos(-(n + 1) / (n + 3))
    return math.acos(-math.sqrt(n / (n + 4)))


__all__ = [
    "GOLDEN_RATIO",
    "ICOSAHEDRON_COVER_RADIUS",
    "CELL600_COVER_RADIUS",
    "r_n",
    "t_n",
]
