"""
Points on spheres and projective spaces.

Single points are immutable pydantic models; bulk work uses (m, n+1) numpy
arrays through the `*_rows` / `*_matrix` helpers. Geodesic distances use the
half-angle form 2·atan2(‖x−y‖, ‖x+y‖), which agrees with arccos(⟨x,y⟩) but
stays accurate for nearly equal and nearly antipodal points.
"""

import math
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from gh_lab.core.exceptions import DimensionMismatchError, ValidationError

NORM_TOLERANCE = 1e-12


class SpherePoint(BaseModel):
    """
    A point of S^n stored as a unit vector in R^{n+1}.

    Attributes:
        coords: Unit-norm coordinates (normalized on construction)
    """

    model_config = ConfigDict(frozen=True)

    coords: Tuple[float, ...]

    @field_validator("coords", mode="before")
    @classmethod
    def normalize(cls, v: Sequence[float]) -> Tuple[float, ...]:
        """Accept any sequence or numpy array and rescale it to unit norm."""
        values = tuple(float(c) for c in np.asarray(v, dtype=float).ravel())
        if not values:
            raise ValueError("a sphere point needs at least one coordinate")
        norm = math.sqrt(math.fsum(c * c for c in values))
        if norm == 0.0 or not math.isfinite(norm):
            raise ValueError("cannot normalize a zero or non-finite vector")
        if norm != 1.0:
            values = tuple(c / norm for c in values)
        return values

    @classmethod
    def from_array(cls, array: np.ndarray) -> "SpherePoint":
        """Wrap an already-unit array without renormalizing it."""
        return cls.model_construct(coords=tuple(float(c) for c in np.asarray(array).ravel()))

    @property
    def dim(self) -> int:
        """Intrinsic dimension n of the sphere S^n carrying this point."""
        return len(self.coords) - 1

    @property
    def vector(self) -> np.ndarray:
        """Coordinates as a fresh numpy array."""
        return np.array(self.coords, dtype=float)

    def antipode(self) -> "SpherePoint":
        """The point −x (exact coordinate negation)."""
        return SpherePoint.model_construct(coords=tuple(-c for c in self.coords))


class ProjectivePoint(BaseModel):
    """
    A point of RP^n, stored through its canonical sphere representative.

    The canonical representative has its last nonzero coordinate positive
    (see `is_canonical`), so x and −x produce equal (and equally hashed)
    projective points.
    """

    model_config = ConfigDict(frozen=True)

    representative: SpherePoint

    @field_validator("representative", mode="after")
    @classmethod
    def canonicalize(cls, point: SpherePoint) -> SpherePoint:
        """Flip the representative so its last nonzero coordinate is positive."""
        return point if is_canonical(point.vector) else point.antipode()

    @classmethod
    def of(cls, point: SpherePoint) -> "ProjectivePoint":
        """Class {x, −x} of a sphere point."""
        return cls(representative=point)

    @property
    def dim(self) -> int:
        return self.representative.dim


def _check_same_dim(x: SpherePoint, y: SpherePoint) -> None:
    if x.dim != y.dim:
        raise DimensionMismatchError(
            "Points live on spheres of different dimension",
            details={"left": x.dim, "right": y.dim},
        )


def geodesic_distance(x: SpherePoint, y: SpherePoint) -> float:
    """
    Great-circle distance d(x, y) = arccos⟨x, y⟩ in [0, π].

    Raises:
        DimensionMismatchError: If x and y have different dimensions
    """
    _check_same_dim(x, y)
    a, b = x.vector, y.vector
    return float(2.0 * math.atan2(np.linalg.norm(a - b), np.linalg.norm(a + b)))


def euclidean_distance(x: SpherePoint, y: SpherePoint) -> float:
    """
    Chord length ‖x − y‖ in [0, 2].

    Raises:
        DimensionMismatchError: If x and y have different dimensions
    """
    _check_same_dim(x, y)
    return float(np.linalg.norm(x.vector - y.vector))


def projective_distance(p: ProjectivePoint, q: ProjectivePoint) -> float:
    """
    Quotient metric min(d(x, x'), d(x, −x')) in [0, π/2].

    Raises:
        DimensionMismatchError: If p and q have different dimensions
    """
    x, y = p.representative, q.representative
    return min(geodesic_distance(x, y), geodesic_distance(x, y.antipode()))


def chord_from_geodesic(angle: float) -> float:
    """‖x − x'‖ = 2 sin(d(x, x')/2)."""
    return 2.0 * math.sin(angle / 2.0)


def geodesic_from_chord(chord: float) -> float:
    """Inverse of `chord_from_geodesic`."""
    return 2.0 * math.asin(min(1.0, max(0.0, chord / 2.0)))


# ---------------------------------------------------------------------------
# Array helpers
# ---------------------------------------------------------------------------

def as_unit_rows(points: np.ndarray) -> np.ndarray:
    """Validate an (m, d) array of unit vectors and return it as float64."""
    arr = np.atleast_2d(np.asarray(points, dtype=float))
    if arr.ndim != 2:
        raise ValidationError("Point arrays must be two-dimensional")
    norms = np.linalg.norm(arr, axis=1)
    if arr.size and np.max(np.abs(norms - 1.0)) > 1e-9:
        raise ValidationError("Point array contains non-unit rows")
    return arr


def geodesic_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise geodesic distances between two (m, d) arrays."""
    if a.shape != b.shape:
        raise DimensionMismatchError(
            "Row arrays must have the same shape",
            details={"left": a.shape, "right": b.shape},
        )
    return 2.0 * np.arctan2(np.linalg.norm(a - b, axis=1), np.linalg.norm(a + b, axis=1))


def geodesic_matrix(a: np.ndarray, b: Optional[np.ndarray] = None) -> np.ndarray:
    """
    Pairwise geodesic distances, shape (len(a), len(b)).

    Intended for small and moderate sets; the diagonal of geodesic_matrix(a)
    is exactly zero and the matrix is exactly symmetric.
    """
    b = a if b is None else b
    if a.shape[1] != b.shape[1]:
        raise DimensionMismatchError(
            "Point arrays have different ambient dimension",
            details={"left": a.shape[1], "right": b.shape[1]},
        )
    diff = np.linalg.norm(a[:, None, :] - b[None, :, :], axis=2)
    summ = np.linalg.norm(a[:, None, :] + b[None, :, :], axis=2)
    return 2.0 * np.arctan2(diff, summ)


def euclidean_matrix(a: np.ndarray, b: Optional[np.ndarray] = None) -> np.ndarray:
    """Pairwise chord lengths, shape (len(a), len(b))."""
    b = a if b is None else b
    return np.linalg.norm(a[:, None, :] - b[None, :, :], axis=2)


def angle_from_inner(inner: np.ndarray) -> np.ndarray:
    """arccos of inner products clamped to [−1, 1] (bulk scans)."""
    return np.arccos(np.clip(inner, -1.0, 1.0))


def north_pole(n: int) -> np.ndarray:
    """N = e_{n+2} in S^{n+1}, i.e. the unit vector with last coordinate 1 in R^{n+1}."""
    pole = np.zeros(n + 1)
    pole[-1] = 1.0
    return pole


def equatorial_inclusion(points: np.ndarray) -> np.ndarray:
    """Embed S^n into S^{n+1} as the equator (append a zero coordinate)."""
    arr = np.atleast_2d(points)
    return np.hstack([arr, np.zeros((arr.shape[0], 1))])


def canonical_mask(points: np.ndarray) -> np.ndarray:
    """
    Rows whose last nonzero coordinate is positive (the zero row counts as canonical).

    This picks one point of every pair {x, −x}; off the equator it is the
    point of the open upper hemisphere.
    """
    points = np.atleast_2d(points)
    nonzero = points != 0.0
    width = points.shape[1]
    last = width - 1 - np.argmax(nonzero[:, ::-1], axis=1)
    values = points[np.arange(len(points)), last]
    return (values > 0.0) | ~nonzero.any(axis=1)


def is_canonical(y: np.ndarray) -> bool:
    """Single-point form of `canonical_mask`."""
    nonzero = np.flatnonzero(y)
    return bool(nonzero.size == 0 or y[nonzero[-1]] > 0.0)


def upper_hemisphere(points: np.ndarray) -> np.ndarray:
    """Reflect points onto the closed upper hemisphere (last coordinate >= 0)."""
    out = np.array(points, dtype=float, copy=True)
    out[..., -1] = np.abs(out[..., -1])
    return out


def rotate_towards(x: np.ndarray, direction: np.ndarray, angle: Union[np.ndarray, float]) -> np.ndarray:
    """
    Move each row of x along the great circle towards `direction` by `angle`.

    The tangent direction is the component of `direction` orthogonal to x.
    Rows where that component vanishes are returned unchanged.
    """
    x = np.atleast_2d(x)
    d = np.atleast_2d(direction)
    tangent = d - np.sum(d * x, axis=1, keepdims=True) * x
    norms = np.linalg.norm(tangent, axis=1, keepdims=True)
    safe = norms[:, 0] > 1e-15
    unit = np.zeros_like(tangent)
    unit[safe] = tangent[safe] / norms[safe]
    theta = np.broadcast_to(np.asarray(angle, dtype=float), (x.shape[0],))[:, None]
    moved = np.cos(theta) * x + np.sin(theta) * unit
    moved[~safe] = x[~safe]
    return moved / np.linalg.norm(moved, axis=1, keepdims=True)


__all__ = [
    "NORM_TOLERANCE",
    "SpherePoint",
    "ProjectivePoint",
    "geodesic_distance",
    "euclidean_distance",
    "projective_distance",
    "chord_from_geodesic",
    "geodesic_from_chord",
    "as_unit_rows",
    "geodesic_rows",
    "geodesic_matrix",
    "euclidean_matrix",
    "angle_from_inner",
    "north_pole",
    "equatorial_inclusion",
    "canonical_mask",
    "is_canonical",
    "upper_hemisphere",
    "rotate_towards",
]
