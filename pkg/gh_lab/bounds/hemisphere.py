"""
The hemisphere correspondence between S^{n+1} and S^n.

The closed upper hemisphere of S^{n+1} splits into a thickened equator
E = {p : d(p, N) > π/3} and cones C_1..C_{n+2} with apex N over the facets of
an inscribed simplex. The correspondence sends p ∈ E to τ(p) and p ∈ C_i to
−p_i; its distortion is at most 2π/3.
"""

import math
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from gh_lab.core.config import get_settings
from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import DimensionMismatchError, ValidationError
from gh_lab.core.parallel import map_chunks
from gh_lab.core.random import STREAM_PAIRS, chunk_bounds, generator, hemisphere_points, sphere_points
from gh_lab.geometry.points import SpherePoint, geodesic_rows, rotate_towards, upper_hemisphere
from gh_lab.geometry.polytopes import SimplexFrame, facet_membership_rows, inscribed_simplex
from gh_lab.geometry.projection import POLE_TOLERANCE

logger = get_logger("bounds.hemisphere")

EQUATOR = 0
THEOREM_BOUND = 2.0 * math.pi / 3.0
# cos(π/3); d(p, N) <= π/3 is tested as p_last >= 1/2
CAP_HEIGHT = 0.5
LOCAL_OFFSET = 0.05

CASES = ("E/E", "C/C", "mixed_near", "mixed_far")


class CaseMaximum(BaseModel):
    model_config = ConfigDict(frozen=True)

    maximum: float = 0.0
    count: int = 0


class DistortionReport(BaseModel):
    """
    Sampled distortion of the hemisphere correspondence.

    Attributes:
        max_distortion: Largest |d(x, x') − d(y, y')| over the sampled pairs
        cases: Per-case maxima and pair counts; cases follow the membership
            of the two points (both in E, both in cones, or one of each split
            by whether d(x, x') <= π/2)
        worst_pair: The two hemisphere points realising max_distortion
    """

    model_config = ConfigDict(frozen=True)

    n: int
    samples: int
    seed: int
    max_distortion: float
    bound: float = THEOREM_BOUND
    tolerance: float = 1e-9
    cases: Dict[str, CaseMaximum] = Field(default_factory=dict)
    worst_pair: Optional[Tuple[List[float], List[float]]] = None

    @property
    def passed(self) -> bool:
        return self.max_distortion <= self.bound + self.tolerance


class HemisphereCorrespondence:
    """
    Classifier and correspondence on the closed upper hemisphere of S^{n+1}.

    Labels: 0 is E, i in 1..n+2 is the cone C_i. The apex N lies on every
    cone; it is assigned to C_1.
    """

    def __init__(self, n: int):
        self.n = n
        self.frame: SimplexFrame = inscribed_simplex(n)

    def _check_rows(self, points: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if pts.shape[1] != self.n + 2:
            raise DimensionMismatchError(
                "Points must lie on S^{n+1}",
                details={"expected": self.n + 2, "got": pts.shape[1]},
            )
        if np.any(pts[:, -1] < 0.0):
            raise ValidationError("Classification is only defined on the upper hemisphere")
        return pts

    def classify_rows(self, points: np.ndarray) -> np.ndarray:
        """Labels for an (m, n+2) array of upper-hemisphere points."""
        pts = self._check_rows(points)
        labels = np.zeros(len(pts), dtype=int)
        in_cap = pts[:, -1] >= CAP_HEIGHT
        head = pts[in_cap, :-1]
        norms = np.linalg.norm(head, axis=1)
        cone = np.ones(len(head), dtype=int)
        away = norms > POLE_TOLERANCE
        if np.any(away):
            cone[away] = facet_membership_rows(head[away] / norms[away, None], self.frame)
        labels[in_cap] = cone
        return labels

    def classify(self, p: SpherePoint) -> int:
        """
        0 for E, otherwise the cone label i.

        Raises:
            ValidationError: If p is in the open lower hemisphere
        """
        return int(self.classify_rows(p.vector[None, :])[0])

    def correspond_rows(self, points: np.ndarray, labels: Optional[np.ndarray] = None) -> np.ndarray:
        """Images in S^n: τ(p) on E and −p_i on C_i."""
        pts = self._check_rows(points)
        labels = self.classify_rows(pts) if labels is None else labels
        out = np.empty((len(pts), self.n + 1))
        equator = labels == EQUATOR
        head = pts[equator, :-1]
        out[equator] = head / np.linalg.norm(head, axis=1, keepdims=True)
        out[~equator] = -self.frame.vertices[labels[~equator] - 1]
        return out

    def correspond(self, p: SpherePoint) -> SpherePoint:
        return SpherePoint.from_array(self.correspond_rows(p.vector[None, :])[0])

    def _pair_chunk(self, job: Tuple[int, int, int, int]) -> dict:
        seed, chunk, start, stop = job
        rng = generator(seed, STREAM_PAIRS, chunk)
        count = stop - start
        local = count // 2
        a = hemisphere_points(rng, count, self.n + 1)
        b = hemisphere_points(rng, count, self.n + 1)
        # second half: b is a nearby point reflected back into the hemisphere
        directions = sphere_points(rng, local, self.n + 1)
        offsets = rng.uniform(0.0, LOCAL_OFFSET, size=local)
        b[count - local:] = upper_hemisphere(rotate_towards(a[count - local:], directions, offsets))

        la, lb = self.classify_rows(a), self.classify_rows(b)
        dx = geodesic_rows(a, b)
        dy = geodesic_rows(self.correspond_rows(a, la), self.correspond_rows(b, lb))
        gap = np.abs(dx - dy)

        in_e_a, in_e_b = la == EQUATOR, lb == EQUATOR
        masks = {
            "E/E": in_e_a & in_e_b,
            "C/C": ~in_e_a & ~in_e_b,
            "mixed_near": (in_e_a != in_e_b) & (dx <= math.pi / 2),
            "mixed_far": (in_e_a != in_e_b) & (dx > math.pi / 2),
        }
        worst = int(np.argmax(gap))
        return {
            "max": float(gap[worst]),
            "pair": (a[worst].tolist(), b[worst].tolist()),
            "cases": {
                name: (float(gap[mask].max()) if mask.any() else 0.0, int(mask.sum()))
                for name, mask in masks.items()
            },
        }

    def verify_distortion(self, samples: int = 100_000, seed: Optional[int] = None,
                          threads: Optional[int] = None) -> DistortionReport:
        """
        Sample hemisphere pairs and measure |d(x, x') − d(y, y')|.

        Half of each chunk is uniform pairs, half is local pairs at most
        LOCAL_OFFSET apart; local pairs find the near-worst configurations
        straddling cone boundaries.

        Raises:
            ValidationError: If samples < 1
        """
        if samples < 1:
            raise ValidationError("verify_distortion needs at least one pair", details={"samples": samples})
        seed = get_settings().seed if seed is None else seed
        jobs = [(seed, chunk, start, stop)
                for chunk, start, stop in chunk_bounds(samples, get_settings().chunk_size)]
        results = map_chunks(self._pair_chunk, jobs, threads=threads)

        best = max(results, key=lambda r: r["max"])
        cases = {}
        for name in CASES:
            cases[name] = CaseMaximum(
                maximum=max(r["cases"][name][0] for r in results),
                count=sum(r["cases"][name][1] for r in results),
            )
        report = DistortionReport(
            n=self.n,
            samples=samples,
            seed=seed,
            max_distortion=best["max"],
            tolerance=get_settings().tolerance,
            cases=cases,
            worst_pair=best["pair"],
        )
        logger.info("hemisphere correspondence n=%d: max distortion %.9f over %d pairs",
                    self.n, report.max_distortion, samples)
        return report


def verify_distortion(n: int, samples: int = 100_000, seed: Optional[int] = None) -> DistortionReport:
    """Module-level shortcut for HemisphereCorrespondence(n).verify_distortion."""
    return HemisphereCorrespondence(n).verify_distortion(samples=samples, seed=seed)


__all__ = [
    "EQUATOR",
    "THEOREM_BOUND",
    "CaseMaximum",
    "DistortionReport",
    "HemisphereCorrespondence",
    "verify_distortion",
]
