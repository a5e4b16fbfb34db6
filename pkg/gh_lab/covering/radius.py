"""
Empirical covering radii on S^n and RP^n.

The radius is the largest distance from a seeded uniform sample to the
nearest center. Nearest centers come from a KD-tree over the chord metric,
which orders points exactly like the geodesic metric on the sphere.
"""

from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.spatial import cKDTree

from gh_lab.core.config import get_settings
from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import ValidationError
from gh_lab.core.parallel import map_chunks
from gh_lab.core.random import STREAM_SPHERE, chunk_bounds, generator, sphere_points

logger = get_logger("covering.radius")


class CoverageMeasurement(BaseModel):
    """
    Result of one covering-radius scan.

    Attributes:
        radius: Max over samples of the distance to the nearest center
        samples: Number of sample points
        worst_point: Sample realizing `radius`
        distances: Per-sample nearest-center distances (only when requested)
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    radius: float
    samples: int
    worst_point: Tuple[float, ...]
    distances: Optional[np.ndarray] = None


def _chord_to_angle(chord: np.ndarray) -> np.ndarray:
    return 2.0 * np.arcsin(np.clip(chord / 2.0, 0.0, 1.0))


def nearest_center_distances(centers: np.ndarray, points: np.ndarray, projective: bool = False) -> np.ndarray:
    """Geodesic (or projective) distance from each point to its nearest center."""
    pool = np.vstack([centers, -centers]) if projective else centers
    chord, _ = cKDTree(pool).query(points)
    return _chord_to_angle(np.asarray(chord, dtype=float))


def measure_covering(centers: np.ndarray, projective: bool = False, samples: Optional[int] = None,
                     seed: Optional[int] = None, keep_distances: bool = False,
                     stream: int = STREAM_SPHERE) -> CoverageMeasurement:
    """
    Scan a seeded uniform sample and report the covering radius of `centers`.

    Args:
        centers: (k, n+1) unit vectors
        projective: Measure in RP^n (a center covers y if it is near y or −y)
        samples: Sample count (defaults to GH_LAB_VALIDATION_SAMPLES)
        seed: RNG seed (defaults to GH_LAB_SEED)
        keep_distances: Also return the per-sample distances

    Raises:
        ValidationError: If there are no centers
    """
    centers = np.atleast_2d(np.asarray(centers, dtype=float))
    if centers.size == 0:
        raise ValidationError("Covering radius needs at least one center")
    settings = get_settings()
    total = samples if samples is not None else settings.validation_samples
    seed = settings.seed if seed is None else seed
    n = centers.shape[1] - 1
    pool = np.vstack([centers, -centers]) if projective else centers
    tree = cKDTree(pool)

    def scan(job: Tuple[int, int, int]) -> Tuple[np.ndarray, np.ndarray]:
        index, start, stop = job
        pts = sphere_points(generator(seed, stream, index), stop - start, n)
        chord, _ = tree.query(pts)
        return pts, _chord_to_angle(np.asarray(chord, dtype=float))

    parts = map_chunks(scan, chunk_bounds(total, settings.chunk_size))
    if not parts:
        raise ValidationError("Covering radius needs at least one sample")
    dists = np.concatenate([d for _, d in parts])
    pts = np.vstack([p for p, _ in parts])
    worst = int(np.argmax(dists))
    logger.debug("covering scan: %d centers, %d samples, radius %.6f", len(centers), total, dists[worst])
    return CoverageMeasurement(
        radius=float(dists[worst]),
        samples=total,
        worst_point=tuple(float(c) for c in pts[worst]),
        distances=dists if keep_distances else None,
    )


def covering_radius(centers: np.ndarray, projective: bool = False, samples: Optional[int] = None,
                    seed: Optional[int] = None) -> float:
    """
    Empirical covering radius (an under-estimate that converges with more samples).

    Raises:
        ValidationError: If there are no centers
    """
    return measure_covering(centers, projective=projective, samples=samples, seed=seed).radius


__all__ = [
    "CoverageMeasurement",
    "nearest_center_distances",
    "measure_covering",
    "covering_radius",
]
