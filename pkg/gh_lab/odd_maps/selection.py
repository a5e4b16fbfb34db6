"""
Odd vertex selection on symmetric Vietoris–Rips complexes.

For a simplex σ with σ ∩ −σ = ∅ let m be the lexicographically largest
coordinate tuple in σ ∪ −σ. The selector returns m when m ∈ σ and −m
otherwise; either way the result is a vertex of σ and v(−σ) = −v(σ).
"""

from typing import Callable, Dict, Optional, Sequence

import numpy as np

from gh_lab.complexes.partition import BarycentricPoint, PartitionOfUnity
from gh_lab.complexes.simplicial import Simplex
from gh_lab.complexes.vietoris_rips import VRComplex
from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import FixedSimplexError, ValidationError
from gh_lab.covering.net import symmetric_net
from gh_lab.odd_maps.functions import OddFunction

logger = get_logger("odd_maps.selection")

# net radius as a fraction of the bump radius ε/2
NET_FRACTION = 0.8


class OddSelector:
    """
    v: simplices → vertices, odd with respect to a vertex involution.

    Args:
        points: Coordinates of the vertices (rows)
        involution: Index of −points[i] for every i
    """

    def __init__(self, points: np.ndarray, involution: Sequence[int]):
        self.points = np.asarray(points, dtype=float)
        self.involution = np.asarray(involution, dtype=int)
        self._keys = [tuple(row) for row in self.points.tolist()]

    def select(self, simplex: Sequence[int]) -> int:
        """
        Raises:
            FixedSimplexError: If σ meets −σ
        """
        members = set(int(v) for v in simplex)
        mirrored = {int(self.involution[v]) for v in members}
        if members & mirrored:
            raise FixedSimplexError("Simplex meets its antipodal image", details={"simplex": sorted(members)})
        top = max(members | mirrored, key=lambda v: self._keys[v])
        return top if top in members else int(self.involution[top])

    def __call__(self, simplex: Sequence[int]) -> int:
        return self.select(simplex)


def vr_vertex_select(complex_: VRComplex) -> OddSelector:
    """
    Odd selector for a symmetric VR complex of a sphere sample.

    Raises:
        ValidationError: If the base space has no coordinates or no involution
        FixedSimplexError: If the ℤ/2 action on the complex is not free
    """
    base = complex_.base
    if base.points is None:
        raise ValidationError("Vertex selection orders vertices by coordinates; base has no points")
    complex_.z2_action()
    return OddSelector(base.points, base.involution)


def selections(complex_: VRComplex, selector: OddSelector) -> Dict[Simplex, int]:
    """v(σ) for every simplex of the complex."""
    return {s: selector.select(s) for s in complex_.simplices}


def realization_to_function(h: Callable[[np.ndarray], BarycentricPoint], selector: OddSelector,
                            complex_: Optional[VRComplex] = None) -> Callable[[np.ndarray], int]:
    """
    f(x) = v(σ_0) where σ_0 holds the vertices of largest weight in h(x).

    With `complex_` given, every h(x) is checked to be supported on one of its simplices.

    Raises:
        ValidationError: (from the returned function) on a support outside the complex
    """

    def f(x: np.ndarray) -> int:
        point = h(x)
        if complex_ is not None and not complex_.contains(point.support):
            raise ValidationError("Barycentric point is not supported on a simplex of the complex",
                                  details={"support": list(point.support)})
        return selector.select(point.max_weight_vertices())

    return f


def vr_pipeline_function(n: int, epsilon: float, seed: Optional[int] = None) -> OddFunction:
    """
    Odd S^n → S^n with modulus of discontinuity at most ε.

    A symmetric net X covers S^n at radius NET_FRACTION·ε/2; y is sent through
    the partition of unity into VR(X; ε) and then to the selected vertex.

    Raises:
        ValidationError: If ε is not in (0, π)
    """
    if not 0.0 < epsilon < np.pi:
        raise ValidationError("Pipeline scale must lie in (0, π)", details={"epsilon": epsilon})
    net = symmetric_net(n, NET_FRACTION * epsilon / 2.0, seed=seed)
    partition = PartitionOfUnity(net, epsilon)
    selector = OddSelector(partition.net, partition.involution)
    to_vertex = realization_to_function(partition.at, selector)
    logger.debug("vr pipeline on S^%d at epsilon %.4f uses %d net points", n, epsilon, len(net))

    def evaluate(rows: np.ndarray) -> np.ndarray:
        return partition.net[[to_vertex(row) for row in rows]]

    return OddFunction(evaluate, n, n, construction="vr_pipeline")


__all__ = [
    "NET_FRACTION",
    "OddSelector",
    "vr_vertex_select",
    "selections",
    "realization_to_function",
    "vr_pipeline_function",
]
