"""
Helmet-trick odd extensions.

Given C with C ∩ ι(C) = ∅ and φ: C → S^n, the extension φ* agrees with φ on
C and sends ι(x) to −φ(x). In the chord metric its distortion satisfies
dis(φ*) ≤ √(dis φ · (4 − dis φ)); in the geodesic metric the extension is
only measured.
"""

import math
from typing import List, Literal, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from gh_lab.core.exceptions import ValidationError
from gh_lab.geometry.points import euclidean_matrix, geodesic_matrix
from gh_lab.metric.space import FiniteMetricSpace


class HelmetExtension(BaseModel):
    """
    Result of a helmet extension.

    Attributes:
        indices: Domain indices, C followed by ι(C)
        images: Row t is φ*(x_{indices[t]})
        base_distortion: dis(φ) on C
        distortion: dis(φ*) on C ∪ ι(C)
        bound: √(dis φ · (4 − dis φ)) for the chord metric, None otherwise
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    indices: List[int]
    images: np.ndarray
    base_distortion: float
    distortion: float
    bound: Optional[float] = None

    def image_of(self, index: int) -> np.ndarray:
        return self.images[self.indices.index(index)]


def euclidean_helmet_bound(dis: float) -> float:
    """√(dis · (4 − dis)), clamped to the chord-metric range [0, 2]."""
    d = min(max(dis, 0.0), 2.0)
    return math.sqrt(d * (4.0 - d))


def _target_matrix(images: np.ndarray, metric: str) -> np.ndarray:
    return euclidean_matrix(images) if metric == "euclidean" else geodesic_matrix(images)


def helmet_extend(space: FiniteMetricSpace, subset: Sequence[int], images: np.ndarray,
                  metric: Literal["geodesic", "euclidean"] = "geodesic") -> HelmetExtension:
    """
    Extend φ: C → S^n oddly to C ∪ ι(C) and measure both distortions.

    Args:
        space: Domain with an involution; its `dist` is used as the domain metric
        subset: Indices of C
        images: (|C|, n+1) unit vectors, row t = φ(subset[t])
        metric: Target metric

    Returns:
        HelmetExtension (bound filled in for the chord metric only)

    Raises:
        ValidationError: If the space has no involution, C meets ι(C), or shapes disagree
    """
    if space.involution is None:
        raise ValidationError("Helmet extension needs a space with an involution")
    c = [int(i) for i in subset]
    if not c:
        raise ValidationError("Helmet extension needs a nonempty subset")
    if len(set(c)) != len(c):
        raise ValidationError("Subset contains repeated indices")
    mirror = [space.involution[i] for i in c]
    if set(c) & set(mirror):
        raise ValidationError("Subset meets its involution image", details={"overlap": sorted(set(c) & set(mirror))})
    phi = np.atleast_2d(np.asarray(images, dtype=float))
    if phi.shape[0] != len(c):
        raise ValidationError("Need one image per subset point", details={"subset": len(c), "images": phi.shape[0]})

    extended = np.vstack([phi, -phi])
    indices = c + mirror

    dom_c = space.dist[np.ix_(c, c)]
    base = float(np.max(np.abs(dom_c - _target_matrix(phi, metric))))
    dom_all = space.dist[np.ix_(indices, indices)]
    full = float(np.max(np.abs(dom_all - _target_matrix(extended, metric))))

    bound = euclidean_helmet_bound(base) if metric == "euclidean" else None
    return HelmetExtension(indices=indices, images=extended, base_distortion=base, distortion=full, bound=bound)


def helmet_extend_euclidean(space: FiniteMetricSpace, subset: Sequence[int], images: np.ndarray) -> HelmetExtension:
    """
    Chord-metric helmet extension with the distortion bound.

    Raises:
        ValidationError: If the domain space does not carry the chord metric
    """
    if space.metric != "euclidean":
        raise ValidationError("Euclidean helmet extension needs a chord-metric domain", details={"metric": space.metric})
    return helmet_extend(space, subset, images, metric="euclidean")


def split_symmetric(space: FiniteMetricSpace) -> List[int]:
    """One representative index per {i, ι(i)} pair (the smaller index)."""
    if space.involution is None:
        raise ValidationError("Space has no involution")
    return [i for i, j in enumerate(space.involution) if i < j]


__all__ = [
    "HelmetExtension",
    "euclidean_helmet_bound",
    "helmet_extend",
    "helmet_extend_euclidean",
    "split_symmetric",
]
