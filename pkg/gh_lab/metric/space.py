"""
Finite metric spaces and relations between them.
"""

from typing import Iterable, List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.spatial import cKDTree

from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import ValidationError
from gh_lab.geometry.points import euclidean_matrix, geodesic_matrix

logger = get_logger("metric.space")

Metric = Literal["geodesic", "euclidean", "abstract"]

TRIANGLE_TOLERANCE = 1e-9
SYMMETRY_TOLERANCE = 1e-12


def _triangle_violation(dist: np.ndarray) -> float:
    """Largest d(i,j) − d(i,k) − d(k,j) over all triples (one pivot at a time)."""
    worst = -np.inf
    for k in range(dist.shape[0]):
        through_k = dist[:, k][:, None] + dist[k, :][None, :]
        worst = max(worst, float(np.max(dist - through_k)))
    return worst


def find_antipodal_involution(points: np.ndarray, tol: float = SYMMETRY_TOLERANCE) -> Optional[List[int]]:
    """Index permutation i ↦ index of −points[i], or None if the set is not symmetric."""
    if len(points) == 0:
        return None
    dist, idx = cKDTree(points).query(-points)
    if np.any(dist > tol):
        return None
    perm = idx.tolist()
    if any(perm[perm[i]] != i or perm[i] == i for i in range(len(perm))):
        return None
    return perm


class FiniteMetricSpace(BaseModel):
    """
    A finite metric space given by labels and a distance matrix.

    Attributes:
        labels: One label per point
        dist: Symmetric (m, m) matrix with zero diagonal
        involution: Optional index permutation ι with ι∘ι = id that preserves distances
        points: Sphere coordinates when the space was sampled from a sphere
        metric: How `dist` was produced
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    labels: List[str]
    dist: np.ndarray
    involution: Optional[Tuple[int, ...]] = None
    points: Optional[np.ndarray] = None
    metric: Metric = "abstract"
    check_triangle: bool = Field(default=True, exclude=True, repr=False)

    @model_validator(mode="after")
    def validate_metric(self) -> "FiniteMetricSpace":
        """Check shape, symmetry, diagonal, triangle inequality and the involution."""
        d = self.dist
        m = len(self.labels)
        if d.ndim != 2 or d.shape != (m, m):
            raise ValidationError(
                "Distance matrix shape does not match labels",
                details={"shape": list(d.shape), "labels": m},
            )
        if m == 0:
            raise ValidationError("A metric space needs at least one point")
        if np.any(np.diag(d) != 0.0):
            raise ValidationError("Distance matrix must have a zero diagonal")
        if np.any(d < 0.0) or not np.all(np.isfinite(d)):
            raise ValidationError("Distances must be finite and nonnegative")
        if np.max(np.abs(d - d.T)) > SYMMETRY_TOLERANCE:
            raise ValidationError("Distance matrix is not symmetric")
        if self.check_triangle and m > 2:
            worst = _triangle_violation(d)
            if worst > TRIANGLE_TOLERANCE:
                raise ValidationError("Triangle inequality violated", details={"excess": worst})

        if self.involution is not None:
            inv = np.asarray(self.involution)
            if sorted(self.involution) != list(range(m)) or np.any(inv[inv] != np.arange(m)):
                raise ValidationError("Involution must be a permutation with ι∘ι = id")
            if not np.array_equal(d[np.ix_(inv, inv)], d):
                raise ValidationError("Involution does not preserve distances exactly")
        return self

    @classmethod
    def from_matrix(cls, dist: np.ndarray, labels: Optional[Sequence[str]] = None,
                    involution: Optional[Sequence[int]] = None) -> "FiniteMetricSpace":
        """Wrap a distance matrix (labels default to "0".."m-1")."""
        dist = np.asarray(dist, dtype=float)
        labels = list(labels) if labels is not None else [str(i) for i in range(len(dist))]
        inv = tuple(int(i) for i in involution) if involution is not None else None
        return cls(labels=labels, dist=dist, involution=inv)

    @classmethod
    def from_points(cls, points: np.ndarray, metric: Metric = "geodesic",
                    symmetric: Optional[bool] = None) -> "FiniteMetricSpace":
        """
        Build the space of a sphere sample.

        Args:
            points: (m, n+1) unit vectors
            metric: "geodesic" (arc length) or "euclidean" (chord length)
            symmetric: Attach the antipodal involution; None detects it

        Returns:
            FiniteMetricSpace with `points` set

        Raises:
            ValidationError: If symmetric=True but the sample is not closed under negation
        """
        pts = np.array(np.atleast_2d(points), dtype=float)
        involution = None
        if symmetric is None or symmetric:
            perm = find_antipodal_involution(pts)
            if perm is None and symmetric:
                raise ValidationError("Point set is not closed under negation")
            if perm is not None:
                # make the pairing bit-exact so ι preserves distances exactly
                for i, j in enumerate(perm):
                    if i < j:
                        pts[j] = -pts[i]
                involution = tuple(perm)

        if metric == "geodesic":
            dist = geodesic_matrix(pts)
        elif metric == "euclidean":
            dist = euclidean_matrix(pts)
        else:
            raise ValidationError(f"Unknown metric: {metric}")
        np.fill_diagonal(dist, 0.0)
        pts.setflags(write=False)
        logger.debug("built %s space on %d points (symmetric=%s)", metric, len(pts), involution is not None)
        return cls(
            labels=[str(i) for i in range(len(pts))],
            dist=dist,
            involution=involution,
            points=pts,
            metric=metric,
            check_triangle=False,
        )

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def is_symmetric(self) -> bool:
        return self.involution is not None

    def _indices(self, subset: Iterable[int]) -> np.ndarray:
        idx = np.asarray(sorted(set(int(i) for i in subset)), dtype=int)
        if idx.size == 0:
            raise ValidationError("Subset must be nonempty")
        if idx[0] < 0 or idx[-1] >= self.size:
            raise ValidationError("Index out of range", details={"size": self.size})
        return idx

    def diameter(self, subset: Optional[Iterable[int]] = None) -> float:
        """
        Largest pairwise distance inside `subset` (whole space when omitted).

        Raises:
            ValidationError: If the subset is empty or has invalid indices
        """
        idx = self._indices(range(self.size) if subset is None else subset)
        return float(self.dist[np.ix_(idx, idx)].max())

    def hausdorff_distance(self, a: Iterable[int], b: Iterable[int]) -> float:
        """
        Hausdorff distance between two nonempty subsets.

        Raises:
            ValidationError: If either subset is empty or has invalid indices
        """
        ia, ib = self._indices(a), self._indices(b)
        block = self.dist[np.ix_(ia, ib)]
        return float(max(block.min(axis=1).max(), block.min(axis=0).max()))

    def min_antipodal_distance(self) -> float:
        """min_i d(i, ι(i)); +inf for spaces without an involution."""
        if self.involution is None:
            return float("inf")
        return float(min(self.dist[i, j] for i, j in enumerate(self.involution)))

    def subspace(self, subset: Iterable[int]) -> "FiniteMetricSpace":
        """Induced subspace on the sorted subset (involution dropped)."""
        idx = self._indices(subset)
        return FiniteMetricSpace(
            labels=[self.labels[i] for i in idx],
            dist=self.dist[np.ix_(idx, idx)],
            points=None if self.points is None else self.points[idx],
            metric=self.metric,
            check_triangle=False,
        )


class Relation(BaseModel):
    """
    A nonempty relation R ⊆ X × Y stored as index pairs.

    Attributes:
        pairs: Sorted, de-duplicated (i, j) pairs
        x_size: |X|
        y_size: |Y|
    """

    model_config = ConfigDict(frozen=True)

    pairs: Tuple[Tuple[int, int], ...]
    x_size: int = Field(ge=1)
    y_size: int = Field(ge=1)

    @model_validator(mode="after")
    def check_pairs(self) -> "Relation":
        if not self.pairs:
            raise ValidationError("A relation must be nonempty")
        for i, j in self.pairs:
            if not (0 <= i < self.x_size and 0 <= j < self.y_size):
                raise ValidationError("Relation index out of range", details={"pair": [i, j]})
        return self

    @classmethod
    def of(cls, pairs: Iterable[Tuple[int, int]], x_size: int, y_size: int) -> "Relation":
        """Build from any iterable of pairs (sorted, duplicates removed)."""
        unique = tuple(sorted({(int(i), int(j)) for i, j in pairs}))
        return cls(pairs=unique, x_size=x_size, y_size=y_size)

    @property
    def is_correspondence(self) -> bool:
        """True iff both projections are surjective."""
        xs = {i for i, _ in self.pairs}
        ys = {j for _, j in self.pairs}
        return len(xs) == self.x_size and len(ys) == self.y_size

    def transpose(self) -> "Relation":
        return Relation.of(((j, i) for i, j in self.pairs), self.y_size, self.x_size)

    def __len__(self) -> int:
        return len(self.pairs)


__all__ = [
    "Metric",
    "TRIANGLE_TOLERANCE",
    "FiniteMetricSpace",
    "Relation",
    "find_antipodal_involution",
]
