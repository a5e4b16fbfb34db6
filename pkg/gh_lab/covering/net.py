"""
Centrally symmetric nets by greedy farthest-point insertion.
"""

import math
from typing import Optional

import numpy as np

from gh_lab.core.config import get_settings
from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import CoverageError, ValidationError
from gh_lab.core.random import STREAM_MISC, STREAM_NET, sample_sphere
from gh_lab.covering.radius import measure_covering, nearest_center_distances

logger = get_logger("covering.net")

# the net stops once candidates are within SAFETY·ε, leaving room for the
# gap between the candidate sample and the whole sphere
SAFETY = 0.85
MIN_CANDIDATES = 2_000
MAX_CANDIDATES = 400_000
REFINEMENTS = 3


def cap_fraction(n: int, radius: float) -> float:
    """Small-radius approximation of the area fraction of a cap of S^n."""
    ball = math.pi ** (n / 2.0) / math.gamma(n / 2.0 + 1.0)
    sphere = 2.0 * math.pi ** ((n + 1) / 2.0) / math.gamma((n + 1) / 2.0)
    return min(1.0, ball * radius**n / sphere)


def candidate_count(n: int, epsilon: float) -> int:
    """Candidate sample size whose own covering radius is about (1 − SAFETY)·ε."""
    fraction = cap_fraction(n, (1.0 - SAFETY) * epsilon)
    estimate = 3.0 * math.log(1.0 / fraction) / fraction if fraction < 1.0 else MIN_CANDIDATES
    return int(min(MAX_CANDIDATES, max(MIN_CANDIDATES, math.ceil(estimate))))


class SymmetricFarthestPointSampler:
    """
    Farthest-point insertion of ± pairs over a candidate sample.

    The current net is always closed under negation, so the distance from a
    candidate y to the net is arccos max_c ⟨y, c⟩ and each insertion only needs
    |⟨y, c_new⟩|.
    """

    def __init__(self, candidates: np.ndarray, centers: Optional[np.ndarray] = None):
        self.candidates = candidates
        if centers is None:
            first = np.zeros(candidates.shape[1])
            first[0] = 1.0
            self.centers = [first, -first]
            self.best_inner = np.abs(candidates[:, 0])
        else:
            self.centers = list(centers)
            self.best_inner = np.cos(nearest_center_distances(centers, candidates))

    @property
    def radius(self) -> float:
        """Current covering radius over the candidate sample."""
        return float(np.arccos(np.clip(self.best_inner.min(), -1.0, 1.0)))

    def insert_farthest(self) -> None:
        idx = int(np.argmin(self.best_inner))
        c = self.candidates[idx].copy()
        self.centers.append(c)
        self.centers.append(-c)
        self.best_inner = np.maximum(self.best_inner, np.abs(self.candidates @ c))

    def net(self) -> np.ndarray:
        return np.array(self.centers)


def _candidates(n: int, count: int, seed: int) -> np.ndarray:
    return sample_sphere(seed, count, n, chunk_size=get_settings().chunk_size, stream=STREAM_NET)


def _validated(net: np.ndarray, epsilon: float, seed: int, samples: int, refinements: int) -> np.ndarray:
    """
    Check `net` on fresh uniform samples and patch the gaps they expose.

    Round r scans seed + r on STREAM_MISC. Sample points at least SAFETY·ε
    from the net become candidates for further ± insertions.

    Raises:
        CoverageError: If a scan still finds a point ε or more away after the last refinement
    """
    for attempt in range(refinements + 1):
        scan = measure_covering(net, samples=samples, seed=seed + attempt, keep_distances=True, stream=STREAM_MISC)
        if scan.radius < epsilon:
            return net
        if attempt == refinements:
            break
        points = sample_sphere(seed + attempt, samples, net.shape[1] - 1,
                               chunk_size=get_settings().chunk_size, stream=STREAM_MISC)
        sampler = SymmetricFarthestPointSampler(points[scan.distances >= SAFETY * epsilon], centers=net)
        while sampler.radius >= SAFETY * epsilon:
            sampler.insert_farthest()
        logger.debug("net refinement %d: radius %.6f >= %.6f, %d -> %d points",
                     attempt + 1, scan.radius, epsilon, len(net), len(sampler.centers))
        net = sampler.net()
    raise CoverageError(
        "Symmetric net does not cover the sphere at the requested radius",
        details={"epsilon": epsilon, "measured": scan.radius, "worst_point": list(scan.worst_point)},
    )


def symmetric_net(n: int, epsilon: float, seed: Optional[int] = None,
                  candidates: Optional[int] = None, validation_samples: Optional[int] = None,
                  refinements: int = REFINEMENTS) -> np.ndarray:
    """
    Centrally symmetric ε-covering of S^n.

    After the greedy pass over the candidate sample the net is scanned with
    `validation_samples` fresh points; gaps are patched with further ± pairs
    for up to `refinements` rounds.

    Args:
        n: Sphere dimension
        epsilon: Target covering radius in radians
        seed: RNG seed for the candidate sample
        candidates: Candidate sample size (heuristic default from n and ε)
        validation_samples: Fresh sample size per scan (defaults to GH_LAB_VALIDATION_SAMPLES, 0 skips)
        refinements: Patch rounds allowed before giving up

    Returns:
        (2m, n+1) array; rows 2i and 2i+1 are exact negatives

    Raises:
        ValidationError: If epsilon <= 0 or n < 0
        CoverageError: If the net still leaves a sampled point ε or more away
    """
    if epsilon <= 0:
        raise ValidationError("Net radius must be positive", details={"epsilon": epsilon})
    if n < 0:
        raise ValidationError("Sphere dimension must be >= 0", details={"n": n})
    if n == 0:
        return np.array([[1.0], [-1.0]])

    settings = get_settings()
    seed = settings.seed if seed is None else seed
    count = candidates or candidate_count(n, epsilon)
    sampler = SymmetricFarthestPointSampler(_candidates(n, count, seed))
    while sampler.radius >= SAFETY * epsilon:
        sampler.insert_farthest()
    net = sampler.net()

    samples = settings.validation_samples if validation_samples is None else validation_samples
    if samples > 0:
        net = _validated(net, epsilon, seed, samples, refinements)
    logger.debug("symmetric net on S^%d: %d points for epsilon %.4f (%d candidates)", n, len(net), epsilon, count)
    return net


def symmetric_net_of_size(n: int, size: int, seed: Optional[int] = None,
                          candidates: int = 20_000) -> np.ndarray:
    """
    Greedy symmetric net with exactly `size` points (size even, >= 2).

    Raises:
        ValidationError: If size is odd or < 2
    """
    if size < 2 or size % 2:
        raise ValidationError("Symmetric nets have an even number (>= 2) of points", details={"size": size})
    if n == 0:
        if size != 2:
            raise ValidationError("S^0 has only two points")
        return np.array([[1.0], [-1.0]])
    seed = get_settings().seed if seed is None else seed
    sampler = SymmetricFarthestPointSampler(_candidates(n, candidates, seed))
    while len(sampler.centers) < size:
        sampler.insert_farthest()
    return sampler.net()


__all__ = [
    "SAFETY",
    "candidate_count",
    "SymmetricFarthestPointSampler",
    "symmetric_net",
    "symmetric_net_of_size",
]
