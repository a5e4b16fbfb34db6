"""
Distortion and codistortion of relations and maps between finite metric spaces.

Maps are integer index arrays: g[i] is the index in Y of the image of x_i.
"""

from typing import Sequence

import numpy as np

from gh_lab.core.exceptions import ValidationError
from gh_lab.metric.space import FiniteMetricSpace, Relation


def _as_map(g: Sequence[int], source: FiniteMetricSpace, target: FiniteMetricSpace) -> np.ndarray:
    arr = np.asarray(g, dtype=int)
    if arr.shape != (source.size,):
        raise ValidationError(
            "Map must assign exactly one image to every point",
            details={"expected": source.size, "got": int(arr.size)},
        )
    if arr.size and (arr.min() < 0 or arr.max() >= target.size):
        raise ValidationError("Map index out of range", details={"target_size": target.size})
    return arr


def distortion(relation: Relation, x: FiniteMetricSpace, y: FiniteMetricSpace) -> float:
    """
    dis(R) = max over (x,y), (x',y') in R of |d_X(x,x') − d_Y(y,y')|.

    Raises:
        ValidationError: If the relation does not fit the two spaces
    """
    if relation.x_size != x.size or relation.y_size != y.size:
        raise ValidationError(
            "Relation sizes do not match the spaces",
            details={"relation": [relation.x_size, relation.y_size], "spaces": [x.size, y.size]},
        )
    pairs = np.asarray(relation.pairs, dtype=int)
    ix, iy = pairs[:, 0], pairs[:, 1]
    return float(np.max(np.abs(x.dist[np.ix_(ix, ix)] - y.dist[np.ix_(iy, iy)])))


def function_distortion(g: Sequence[int], x: FiniteMetricSpace, y: FiniteMetricSpace) -> float:
    """dis(g) = max over x, x' of |d_X(x,x') − d_Y(g(x),g(x'))|."""
    gm = _as_map(g, x, y)
    return float(np.max(np.abs(x.dist - y.dist[np.ix_(gm, gm)])))


def codistortion(g: Sequence[int], h: Sequence[int], x: FiniteMetricSpace, y: FiniteMetricSpace) -> float:
    """
    codis(g, h) = max over x ∈ X, y ∈ Y of |d_X(x, h(y)) − d_Y(g(x), y)|.

    Args:
        g: Map X → Y
        h: Map Y → X
    """
    gm, hm = _as_map(g, x, y), _as_map(h, y, x)
    # entry [a, b] compares d_X(x_a, h(y_b)) with d_Y(g(x_a), y_b)
    return float(np.max(np.abs(x.dist[:, hm] - y.dist[gm, :])))


def relation_from_function(g: Sequence[int], x: FiniteMetricSpace, y: FiniteMetricSpace) -> Relation:
    """Graph R_g = {(x, g(x))}."""
    gm = _as_map(g, x, y)
    return Relation.of(enumerate(gm.tolist()), x.size, y.size)


def relation_from_maps(g: Sequence[int], h: Sequence[int],
                       x: FiniteMetricSpace, y: FiniteMetricSpace) -> Relation:
    """
    Correspondence graph(g) ∪ graph(h)ᵀ.

    Its distortion equals max{dis g, dis h, codis(g, h)}.
    """
    gm, hm = _as_map(g, x, y), _as_map(h, y, x)
    pairs = list(enumerate(gm.tolist())) + [(xi, yi) for yi, xi in enumerate(hm.tolist())]
    return Relation.of(pairs, x.size, y.size)


def maps_bound(g: Sequence[int], h: Sequence[int], x: FiniteMetricSpace, y: FiniteMetricSpace) -> float:
    """max{dis g, dis h, codis(g, h)}, an upper bound on 2·d_GH(X, Y)."""
    return max(function_distortion(g, x, y), function_distortion(h, y, x), codistortion(g, h, x, y))


__all__ = [
    "distortion",
    "function_distortion",
    "codistortion",
    "relation_from_function",
    "relation_from_maps",
    "maps_bound",
]
