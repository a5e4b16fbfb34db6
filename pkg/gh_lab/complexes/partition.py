"""
ℤ/2-invariant partitions of unity subordinate to {B(x, ε/2) : x ∈ X}.

For a centrally symmetric net X ⊂ S^k the map y ↦ Σ ρ_x(y)·x lands in the
geometric realization of VR(X; ε) and is odd. The bump for a center x is
max(0, ε/2 − d(x, y)); weights are the normalized bumps.
"""

from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from scipy.spatial import cKDTree

from gh_lab.core.exceptions import CoverageError, ValidationError
from gh_lab.geometry.points import as_unit_rows, chord_from_geodesic, geodesic_matrix, is_canonical
from gh_lab.metric.space import find_antipodal_involution

WEIGHT_TOLERANCE = 1e-12


class BarycentricPoint(BaseModel):
    """A point Σ λ_i x_i of a geometric realization."""

    model_config = ConfigDict(frozen=True)

    support: Tuple[int, ...]
    weights: Tuple[float, ...]

    @model_validator(mode="after")
    def check_weights(self) -> "BarycentricPoint":
        if len(self.support) != len(self.weights) or not self.support:
            raise ValidationError("Support and weights must be nonempty and of equal length")
        if min(self.weights) <= 0.0:
            raise ValidationError("Barycentric weights must be positive")
        if abs(sum(self.weights) - 1.0) > WEIGHT_TOLERANCE:
            raise ValidationError("Barycentric weights must sum to 1", details={"sum": sum(self.weights)})
        return self

    def weight_of(self, vertex: int) -> float:
        try:
            return self.weights[self.support.index(vertex)]
        except ValueError:
            return 0.0

    def max_weight_vertices(self) -> Tuple[int, ...]:
        """Vertices of the support carrying the largest weight (exact comparison)."""
        top = max(self.weights)
        return tuple(v for v, w in zip(self.support, self.weights) if w == top)


class PartitionOfUnity:
    """
    The partition ρ_x(y) for a fixed symmetric net and scale.

    Args:
        net: (m, k+1) centrally symmetric array of unit vectors
        epsilon: Scale ε in (0, π); bumps are supported on open ε/2-balls

    Raises:
        ValidationError: If the net is not centrally symmetric or ε is out of range
    """

    def __init__(self, net: np.ndarray, epsilon: float):
        if not 0.0 < epsilon < np.pi:
            raise ValidationError("epsilon must lie in (0, π)", details={"epsilon": epsilon})
        self.net = as_unit_rows(net)
        involution = find_antipodal_involution(self.net)
        if involution is None:
            raise ValidationError("Partition of unity needs a centrally symmetric net")
        self.involution = np.asarray(involution, dtype=int)
        self.epsilon = float(epsilon)
        self._tree = cKDTree(self.net)
        # small slack so the strict test d < ε/2 decides membership
        self._chord = chord_from_geodesic(self.epsilon / 2.0) + 1e-12

    def _canonical_weights(self, y: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        candidates = np.asarray(sorted(self._tree.query_ball_point(y, self._chord)), dtype=int)
        if candidates.size == 0:
            raise CoverageError("Point is not covered by the net", details={"point": y.tolist()})
        d = geodesic_matrix(y[None, :], self.net[candidates])[0]
        bumps = self.epsilon / 2.0 - d
        keep = bumps > 0.0
        if not np.any(keep):
            raise CoverageError("Point is not covered by the net", details={"point": y.tolist()})
        support, bumps = candidates[keep], bumps[keep]
        return support, bumps / bumps.sum()

    def at(self, y: np.ndarray) -> BarycentricPoint:
        """
        φ(y) as a barycentric point of VR(net; ε).

        Non-canonical y are evaluated at −y with the support mapped through
        the involution, so φ(−y) = −φ(y) holds exactly.

        Raises:
            CoverageError: If no center lies within ε/2 of y
        """
        y = np.asarray(y, dtype=float)
        if is_canonical(y):
            support, weights = self._canonical_weights(y)
        else:
            support, weights = self._canonical_weights(-y)
            support = self.involution[support]
        order = np.argsort(support, kind="stable")
        return BarycentricPoint(
            support=tuple(int(v) for v in support[order]),
            weights=tuple(float(w) for w in weights[order]),
        )

    def rows(self, points: np.ndarray) -> List[BarycentricPoint]:
        return [self.at(p) for p in np.atleast_2d(points)]


def partition_of_unity_map(net: np.ndarray, epsilon: float, y: np.ndarray,
                           partition: Optional[PartitionOfUnity] = None) -> BarycentricPoint:
    """One-shot evaluation of φ(y); pass `partition` to reuse its search tree."""
    partition = partition or PartitionOfUnity(net, epsilon)
    return partition.at(y)


__all__ = [
    "BarycentricPoint",
    "PartitionOfUnity",
    "partition_of_unity_map",
]
