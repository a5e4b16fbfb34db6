"""
Sampled estimates of the distortion and the modulus of discontinuity.

Both are lower estimates: they maximize over finitely many points or pairs.
"""

import math
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.spatial import cKDTree

from gh_lab.core.config import get_settings
from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import ValidationError
from gh_lab.core.parallel import map_chunks
from gh_lab.core.random import (
    STREAM_MISC,
    STREAM_PAIRS,
    chunk_bounds,
    generator,
    hemisphere_points,
    sample_sphere,
    sphere_points,
)
from gh_lab.geometry.points import angle_from_inner, chord_from_geodesic, geodesic_rows, rotate_towards, upper_hemisphere
from gh_lab.odd_maps.functions import OddFunction

logger = get_logger("odd_maps.estimators")

LOCAL_OFFSET = 0.05
PAIR_BLOCK = 2_048


class DiscontinuityEstimate(BaseModel):
    """
    δ̂(f) at scale η.

    Attributes:
        delta_hat: Largest image diameter over the sampled η-balls
        worst_point: Center of the ball realising delta_hat
        witness: Two images at distance delta_hat
    """

    model_config = ConfigDict(frozen=True)

    eta: float
    samples: int
    delta_hat: float
    worst_point: Optional[List[float]] = None
    witness: Optional[Tuple[List[float], List[float]]] = None


def _check_eta(eta: float) -> None:
    if eta <= 0:
        raise ValidationError("eta must be positive", details={"eta": eta})


def image_diameter(images: np.ndarray) -> Tuple[float, int, int]:
    """Geodesic diameter of a set of unit vectors and a pair realising it."""
    gram = images @ images.T
    flat = int(np.argmin(gram))
    a, b = divmod(flat, len(images))
    return float(angle_from_inner(gram[a, b])), a, b


def estimate_modulus(f: OddFunction, eta: float, samples: Optional[int] = None, seed: Optional[int] = None,
                     points: Optional[np.ndarray] = None, threads: Optional[int] = None) -> DiscontinuityEstimate:
    """
    δ̂ = max over sampled x of diam{f(x') : sampled x' with d(x, x') <= η}.

    Args:
        f: Function to estimate
        eta: Ball radius η > 0
        samples: Number of uniform points on S^k (ignored when `points` is given)
        seed: Sampling seed
        points: Explicit sample to reuse across estimators

    Raises:
        ValidationError: If eta <= 0 or no sample is available
    """
    _check_eta(eta)
    settings = get_settings()
    seed = settings.seed if seed is None else seed
    if points is None:
        if samples is None:
            samples = settings.validation_samples
        points = sample_sphere(seed, samples, f.source_dim, chunk_size=settings.chunk_size)
    points = np.atleast_2d(points)
    if len(points) == 0:
        raise ValidationError("estimate_modulus needs at least one sample")

    images = f(points)
    tree = cKDTree(points)
    radius = chord_from_geodesic(min(eta, math.pi))

    def job(bounds: Tuple[int, int, int]) -> Tuple[float, int, int, int]:
        _, start, stop = bounds
        best = (-1.0, start, start, start)
        for i, neighbours in enumerate(tree.query_ball_point(points[start:stop], radius), start=start):
            idx = np.asarray(neighbours, dtype=int)
            value, a, b = image_diameter(images[idx])
            if value > best[0]:
                best = (value, i, int(idx[a]), int(idx[b]))
        return best

    results = map_chunks(job, chunk_bounds(len(points), settings.chunk_size), threads=threads)
    value, center, a, b = max(results, key=lambda r: r[0])
    logger.debug("modulus estimate for %r at eta=%.4f: %.6f", f, eta, value)
    return DiscontinuityEstimate(
        eta=eta,
        samples=len(points),
        delta_hat=value,
        worst_point=points[center].tolist(),
        witness=(images[a].tolist(), images[b].tolist()),
    )


def modulus_at(f: OddFunction, x: np.ndarray, eta: float, samples: int = 10_000,
               seed: Optional[int] = None) -> DiscontinuityEstimate:
    """
    δ̂(f, x): image diameter of a sampled η-cap around x (x included).

    Offsets follow a k-dimensional disk law, exact for small caps.
    """
    _check_eta(eta)
    seed = get_settings().seed if seed is None else seed
    x = np.asarray(x, dtype=float)
    k = f.source_dim
    rng = generator(seed, STREAM_MISC)
    directions = sphere_points(rng, samples, k)
    angles = eta * rng.uniform(0.0, 1.0, size=samples) ** (1.0 / k)
    cap = np.vstack([x[None, :], rotate_towards(np.tile(x, (samples, 1)), directions, angles)])
    images = f(cap)
    value, a, b = image_diameter(images)
    return DiscontinuityEstimate(eta=eta, samples=len(cap), delta_hat=value, worst_point=x.tolist(),
                                 witness=(images[a].tolist(), images[b].tolist()))


def _pair_gaps(f: OddFunction, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.abs(geodesic_rows(a, b) - geodesic_rows(f(a), f(b)))


def _all_pairs(f: OddFunction, points: np.ndarray, threads: Optional[int]) -> float:
    images = f(points)
    m = len(points)

    def job(i: int) -> float:
        rest = np.arange(i + 1, m)
        if rest.size == 0:
            return 0.0
        a = np.repeat(points[i][None, :], rest.size, axis=0)
        fa = np.repeat(images[i][None, :], rest.size, axis=0)
        return float(np.max(np.abs(geodesic_rows(a, points[rest]) - geodesic_rows(fa, images[rest]))))

    return max(map_chunks(job, range(m), threads=threads), default=0.0)


def _neighbour_pairs(f: OddFunction, points: np.ndarray, reach: float, seed: int,
                     threads: Optional[int]) -> float:
    """Every pair of `points` within geodesic `reach`, plus len(points) random index pairs."""
    images = f(points)
    m = len(points)
    tree = cKDTree(points)
    radius = chord_from_geodesic(min(reach, math.pi)) + 1e-12

    def gaps(i: np.ndarray, j: np.ndarray) -> float:
        if i.size == 0:
            return 0.0
        return float(np.max(np.abs(geodesic_rows(points[i], points[j]) - geodesic_rows(images[i], images[j]))))

    def job(bounds: Tuple[int, int, int]) -> float:
        _, start, stop = bounds
        left, right = [], []
        for i, neighbours in enumerate(tree.query_ball_point(points[start:stop], radius), start=start):
            idx = np.asarray(neighbours, dtype=int)
            idx = idx[idx > i]
            left.append(np.full(idx.size, i, dtype=int))
            right.append(idx)
        return gaps(np.concatenate(left), np.concatenate(right))

    local = max(map_chunks(job, chunk_bounds(m, PAIR_BLOCK), threads=threads), default=0.0)
    rng = generator(seed, STREAM_PAIRS)
    i, j = rng.integers(0, m, size=m), rng.integers(0, m, size=m)
    return max(local, gaps(i, j))


def estimate_distortion(f: OddFunction, samples: Optional[int] = None, seed: Optional[int] = None,
                        points: Optional[np.ndarray] = None, hemisphere: bool = False,
                        threads: Optional[int] = None, eta: Optional[float] = None) -> float:
    """
    Sampled dis(f) = max |d(x, x') − d(f x, f x')|.

    With `points`, all pairs of the given sample are used; adding `eta`
    narrows this to the pairs within 2η of each other plus len(points)
    random pairs. The witness pair of
    `estimate_modulus(f, eta, points=points)` is always among them, so on
    a shared sample δ̂ <= dis_hat + 2η. Without `points`, `samples` random
    pairs are drawn: half independent, half local pairs at most
    LOCAL_OFFSET apart. `hemisphere` restricts both points to the closed
    upper hemisphere.

    Raises:
        ValidationError: If fewer than two points or pairs are requested, or eta <= 0
    """
    settings = get_settings()
    if points is not None:
        points = np.atleast_2d(points)
        if len(points) < 2:
            raise ValidationError("Distortion needs at least two points")
        if eta is None:
            return _all_pairs(f, points, threads)
        _check_eta(eta)
        seed = settings.seed if seed is None else seed
        value = _neighbour_pairs(f, points, 2.0 * eta, seed, threads)
        logger.debug("distortion estimate for %r over %d points at eta=%.4f: %.6f", f, len(points), eta, value)
        return value

    samples = settings.validation_samples if samples is None else samples
    if samples < 2:
        raise ValidationError("Distortion needs at least two pairs", details={"samples": samples})
    seed = settings.seed if seed is None else seed
    k = f.source_dim
    draw = hemisphere_points if hemisphere else sphere_points

    def job(bounds: Tuple[int, int, int]) -> float:
        chunk, start, stop = bounds
        rng = generator(seed, STREAM_PAIRS, chunk)
        count = stop - start
        local = count // 2
        a, b = draw(rng, count, k), draw(rng, count, k)
        directions = sphere_points(rng, local, k)
        offsets = rng.uniform(0.0, LOCAL_OFFSET, size=local)
        near = rotate_towards(a[count - local:], directions, offsets)
        b[count - local:] = upper_hemisphere(near) if hemisphere else near
        return float(np.max(_pair_gaps(f, a, b)))

    value = max(map_chunks(job, chunk_bounds(samples, settings.chunk_size), threads=threads))
    logger.debug("distortion estimate for %r over %d pairs: %.6f", f, samples, value)
    return value


__all__ = [
    "DiscontinuityEstimate",
    "image_diameter",
    "estimate_modulus",
    "modulus_at",
    "estimate_distortion",
]
