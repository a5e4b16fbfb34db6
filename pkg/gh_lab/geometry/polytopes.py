"""
Vertex sets of regular polytopes inscribed in spheres.
"""

import itertools
import math
from functools import lru_cache
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict

from gh_lab.core.exceptions import DimensionMismatchError, ValidationError
from gh_lab.geometry.constants import GOLDEN_RATIO
from gh_lab.geometry.points import SpherePoint


@lru_cache(maxsize=None)
def _simplex_coords(n: int) -> np.ndarray:
    # Built recursively: p_1 is the last basis vector and the remaining
    # vertices are a scaled copy of the (n−1)-simplex at height −1/(n+1).
    if n == 0:
        return np.array([[1.0], [-1.0]])
    sub = _simplex_coords(n - 1)
    a = 1.0 / (n + 1)
    top = np.zeros((1, n + 1))
    top[0, -1] = 1.0
    rest = np.hstack([math.sqrt(1.0 - a * a) * sub, np.full((n + 1, 1), -a)])
    out = np.vstack([top, rest])
    out.setflags(write=False)
    return out


class SimplexFrame(BaseModel):
    """
    A regular (n+1)-simplex inscribed in S^n.

    Vertices are labelled 1..n+2 (p_1 … p_{n+2}); `vertices` row i−1 holds p_i.
    Facet F_i is the facet opposite p_i.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    vertices: np.ndarray

    def vertex(self, label: int) -> np.ndarray:
        """Return p_label (1-based)."""
        if not 1 <= label <= self.n + 2:
            raise ValidationError("Vertex label out of range", details={"label": label})
        return self.vertices[label - 1]

    def facet_vertices(self, label: int) -> np.ndarray:
        """Vertices of the facet F_label (all p_j with j != label)."""
        mask = np.arange(1, self.n + 3) != label
        return self.vertices[mask]

    def gram(self) -> np.ndarray:
        return self.vertices @ self.vertices.T


def inscribed_simplex(n: int) -> SimplexFrame:
    """
    Regular simplex inscribed in S^n.

    The vertices sum to zero and have pairwise inner products −1/(n+1).

    Raises:
        ValidationError: If n < 1
    """
    if n < 1:
        raise ValidationError("Simplex dimension must be >= 1", details={"n": n})
    return SimplexFrame(n=n, vertices=_simplex_coords(n))


def facet_membership(point: SpherePoint, frame: SimplexFrame) -> int:
    """
    Label i of a facet F_i whose cone contains `point`.

    The cone over F_i is where ⟨u, p_i⟩ is minimal among all vertices, so the
    label is the argmin of the inner products; ties go to the smallest label.

    Raises:
        DimensionMismatchError: If the point is not on S^n
    """
    if point.dim != frame.n:
        raise DimensionMismatchError(
            "Point and simplex dimensions differ",
            details={"point": point.dim, "simplex": frame.n},
        )
    return int(np.argmin(frame.vertices @ point.vector)) + 1


def facet_membership_rows(points: np.ndarray, frame: SimplexFrame) -> np.ndarray:
    """Vectorized `facet_membership` for an (m, n+1) array; returns labels."""
    return np.argmin(points @ frame.vertices.T, axis=1) + 1


def polygon_vertices(m: int) -> np.ndarray:
    """Vertices of the regular m-gon on S^1, the first one at angle 0."""
    if m < 1:
        raise ValidationError("Polygon needs at least one vertex", details={"m": m})
    theta = 2.0 * np.pi * np.arange(m) / m
    return np.column_stack([np.cos(theta), np.sin(theta)])


def icosahedron_vertices() -> np.ndarray:
    """The 12 vertices of the regular icosahedron on S^2."""
    phi = GOLDEN_RATIO
    rows: List[List[float]] = []
    for s1 in (1.0, -1.0):
        for s2 in (1.0, -1.0):
            rows.append([0.0, s1, s2 * phi])
            rows.append([s1, s2 * phi, 0.0])
            rows.append([s2 * phi, 0.0, s1])
    return np.array(rows) / math.sqrt(1.0 + phi * phi)


def _is_even(perm: tuple) -> bool:
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return inversions % 2 == 0


def cell600_vertices() -> np.ndarray:
    """
    The 120 vertices of the 600-cell on S^3.

    8 permutations of (±1, 0, 0, 0), 16 points (±½, ±½, ±½, ±½) and 96 even
    permutations of (±φ/2, ±½, ±φ⁻¹/2, 0).
    """
    rows: List[List[float]] = []
    for axis in range(4):
        for sign in (1.0, -1.0):
            row = [0.0] * 4
            row[axis] = sign
            rows.append(row)
    for signs in itertools.product((0.5, -0.5), repeat=4):
        rows.append(list(signs))
    base = (GOLDEN_RATIO / 2.0, 0.5, 1.0 / (2.0 * GOLDEN_RATIO), 0.0)
    even_perms = [p for p in itertools.permutations(range(4)) if _is_even(p)]
    for signs in itertools.product((1.0, -1.0), repeat=3):
        signed = (signs[0] * base[0], signs[1] * base[1], signs[2] * base[2], 0.0)
        for perm in even_perms:
            rows.append([signed[perm[i]] for i in range(4)])
    return np.array(rows)


__all__ = [
    "SimplexFrame",
    "inscribed_simplex",
    "facet_membership",
    "facet_membership_rows",
    "polygon_vertices",
    "icosahedron_vertices",
    "cell600_vertices",
]
