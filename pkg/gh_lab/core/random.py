"""
Seeded sampling on spheres.

RNG contract: a (seed, stream, chunk) triple always yields the same
`numpy.random.Generator`, so a sampler split into chunks produces identical
points whatever the worker count.
"""

from typing import Iterator, Tuple

import numpy as np

# stream ids keep unrelated samplers from sharing random numbers
STREAM_SPHERE = 1
STREAM_HEMISPHERE = 2
STREAM_PAIRS = 3
STREAM_NET = 4
STREAM_MISC = 5


def generator(seed: int, stream: int = STREAM_MISC, chunk: int = 0) -> np.random.Generator:
    """Return the generator for one chunk of one stream."""
    sequence = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(stream), int(chunk)))
    return np.random.Generator(np.random.PCG64(sequence))


def sphere_points(rng: np.random.Generator, count: int, n: int) -> np.ndarray:
    """Uniform points on S^n (Gaussian-normalize), shape (count, n+1)."""
    g = rng.standard_normal((count, n + 1))
    norms = np.linalg.norm(g, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    return g / norms


def hemisphere_points(rng: np.random.Generator, count: int, n: int) -> np.ndarray:
    """Uniform points on the closed upper hemisphere of S^n (last coordinate >= 0)."""
    pts = sphere_points(rng, count, n)
    pts[:, -1] = np.abs(pts[:, -1])
    return pts


def chunk_bounds(total: int, chunk_size: int) -> Iterator[Tuple[int, int, int]]:
    """Yield (chunk index, start, stop) covering range(total)."""
    for index, start in enumerate(range(0, total, chunk_size)):
        yield index, start, min(start + chunk_size, total)


def sample_sphere(seed: int, count: int, n: int, chunk_size: int = 65_536,
                  stream: int = STREAM_SPHERE) -> np.ndarray:
    """Deterministic uniform sample of S^n assembled chunk by chunk."""
    parts = [
        sphere_points(generator(seed, stream, index), stop - start, n)
        for index, start, stop in chunk_bounds(count, chunk_size)
    ]
    if not parts:
        return np.empty((0, n + 1))
    return np.vstack(parts)


def sample_hemisphere(seed: int, count: int, n: int, chunk_size: int = 65_536,
                      stream: int = STREAM_HEMISPHERE) -> np.ndarray:
    """Deterministic uniform sample of the closed upper hemisphere of S^n."""
    pts = sample_sphere(seed, count, n, chunk_size=chunk_size, stream=stream)
    pts[:, -1] = np.abs(pts[:, -1])
    return pts


__all__ = [
    "STREAM_SPHERE",
    "STREAM_HEMISPHERE",
    "STREAM_PAIRS",
    "STREAM_NET",
    "STREAM_MISC",
    "generator",
    "sphere_points",
    "hemisphere_points",
    "chunk_bounds",
    "sample_sphere",
    "sample_hemisphere",
]
