"""
Odd functions between spheres.

An OddFunction wraps a row-wise evaluator S^k → S^n. The evaluator is only
ever applied to canonical points (last nonzero coordinate positive); the
image of a non-canonical x is −f(−x). This makes f(−x) = −f(x) hold bit for
bit whatever the evaluator does.
"""

from typing import Callable

import numpy as np

from gh_lab.bounds.hemisphere import HemisphereCorrespondence
from gh_lab.core.exceptions import DimensionMismatchError, ValidationError
from gh_lab.geometry.points import canonical_mask

Evaluator = Callable[[np.ndarray], np.ndarray]

CONSTRUCTIONS = (
    "identity",
    "equatorial_helmet",
    "cone_vertex",
    "linear_project_nearest",
    "vr_pipeline",
)


class OddFunction:
    """
    A function S^k → S^n with f(−x) = −f(x).

    Attributes:
        source_dim: k
        target_dim: n
        construction: Tag naming how the function was built
    """

    def __init__(self, evaluator: Evaluator, source_dim: int, target_dim: int, construction: str):
        self._evaluator = evaluator
        self.source_dim = source_dim
        self.target_dim = target_dim
        self.construction = construction

    def __repr__(self) -> str:
        return f"OddFunction({self.construction}: S^{self.source_dim} -> S^{self.target_dim})"

    def __call__(self, points: np.ndarray) -> np.ndarray:
        """
        Evaluate on one point (shape (k+1,)) or on rows (shape (m, k+1)).

        Raises:
            DimensionMismatchError: If the points are not on S^k
        """
        arr = np.asarray(points, dtype=float)
        single = arr.ndim == 1
        rows = np.atleast_2d(arr)
        if rows.shape[1] != self.source_dim + 1:
            raise DimensionMismatchError(
                "Points do not lie on the source sphere",
                details={"expected": self.source_dim + 1, "got": rows.shape[1]},
            )
        flip = ~canonical_mask(rows)
        canonical = np.where(flip[:, None], -rows, rows)
        images = np.array(self._evaluator(canonical), dtype=float)
        images[flip] = -images[flip]
        return images[0] if single else images

    def oddness_violations(self, points: np.ndarray) -> int:
        """Number of rows where f(−x) differs from −f(x) in any coordinate."""
        rows = np.atleast_2d(points)
        return int(np.sum(np.any(self(-rows) != -self(rows), axis=1)))

    def compose(self, inner: "OddFunction") -> "OddFunction":
        """self ∘ inner."""
        if inner.target_dim != self.source_dim:
            raise DimensionMismatchError(
                "Cannot compose: inner target and outer source differ",
                details={"inner_target": inner.target_dim, "outer_source": self.source_dim},
            )
        return OddFunction(lambda rows: self(inner(rows)), inner.source_dim, self.target_dim,
                           construction=f"{self.construction}∘{inner.construction}")

    @classmethod
    def identity(cls, n: int) -> "OddFunction":
        return cls(lambda rows: rows.copy(), n, n, construction="identity")


def equatorial_inclusion_map(k: int) -> OddFunction:
    """The isometric inclusion S^k ↪ S^{k+1} as the equator."""
    return OddFunction(lambda rows: np.hstack([rows, np.zeros((len(rows), 1))]), k, k + 1,
                       construction="equatorial_inclusion")


def _check_dimension(n: int) -> None:
    if n < 1:
        raise ValidationError("Target sphere dimension must be >= 1", details={"n": n})


def equatorial_helmet(n: int) -> OddFunction:
    """
    S^{n+1} → S^n: x ↦ x_head/‖x_head‖, with the poles sent to ±e_1.

    On the upper hemisphere this is τ; equator points are fixed.
    """
    _check_dimension(n)
    e1 = np.zeros(n + 1)
    e1[0] = 1.0

    def evaluate(rows: np.ndarray) -> np.ndarray:
        head = rows[:, :-1]
        norms = np.linalg.norm(head, axis=1)
        out = np.tile(e1, (len(rows), 1))
        away = norms > 0.0
        out[away] = head[away] / norms[away, None]
        return out

    return OddFunction(evaluate, n + 1, n, construction="equatorial_helmet")


def cone_vertex_function(n: int) -> OddFunction:
    """
    S^{n+1} → S^n from the hemisphere correspondence: τ on the thickened
    equator, −p_i on the cone C_i, extended to the lower hemisphere by oddness.
    """
    _check_dimension(n)
    correspondence = HemisphereCorrespondence(n)
    # canonical rows have last coordinate >= 0, so they are hemisphere points
    return OddFunction(correspondence.correspond_rows, n + 1, n, construction="cone_vertex")


def linear_project_nearest(k: int, n: int) -> OddFunction:
    """
    S^k → S^n for k >= n: keep the first n+1 coordinates and normalize.

    Where those coordinates vanish the canonical image is e_1.
    """
    _check_dimension(n)
    if k < n:
        raise ValidationError("Projection needs k >= n", details={"k": k, "n": n})
    e1 = np.zeros(n + 1)
    e1[0] = 1.0

    def evaluate(rows: np.ndarray) -> np.ndarray:
        head = rows[:, :n + 1]
        norms = np.linalg.norm(head, axis=1)
        out = np.tile(e1, (len(rows), 1))
        away = norms > 0.0
        out[away] = head[away] / norms[away, None]
        return out

    return OddFunction(evaluate, k, n, construction="linear_project_nearest")


__all__ = [
    "CONSTRUCTIONS",
    "OddFunction",
    "equatorial_inclusion_map",
    "equatorial_helmet",
    "cone_vertex_function",
    "linear_project_nearest",
]
