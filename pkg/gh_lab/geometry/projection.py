"""
Equatorial projection from the upper hemisphere of S^{n+1} onto S^n.
"""

import numpy as np

from gh_lab.core.exceptions import ValidationError
from gh_lab.geometry.points import SpherePoint

POLE_TOLERANCE = 1e-15


def tau(x: SpherePoint, embedded: bool = False) -> SpherePoint:
    """
    Project x onto the equator along the meridian through the north pole.

    Args:
        x: Point of S^{n+1} with last coordinate >= 0, x != N
        embedded: Return the image inside S^{n+1} (last coordinate 0)
            instead of as a point of S^n

    Returns:
        The normalized equatorial part of x

    Raises:
        ValidationError: If x is the north pole or lies in the open lower hemisphere
    """
    v = x.vector
    if v[-1] < 0.0:
        raise ValidationError("tau is only defined on the upper hemisphere", details={"last": v[-1]})
    head = v[:-1]
    norm = float(np.linalg.norm(head))
    if norm <= POLE_TOLERANCE:
        raise ValidationError("tau is undefined at the north pole")
    image = head / norm
    if embedded:
        image = np.append(image, 0.0)
    return SpherePoint.from_array(image)


def tau_rows(points: np.ndarray) -> np.ndarray:
    """
    Vectorized tau for an (m, n+2) array of upper-hemisphere points.

    Returns an (m, n+1) array; rows at the pole raise ValidationError.
    """
    head = points[:, :-1]
    norms = np.linalg.norm(head, axis=1, keepdims=True)
    if np.any(norms <= POLE_TOLERANCE):
        raise ValidationError("tau is undefined at the north pole")
    return head / norms


__all__ = ["tau", "tau_rows", "POLE_TOLERANCE"]
