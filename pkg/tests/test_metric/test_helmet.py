"""
Unit tests for helmet extensions.
"""

import numpy as np
import pytest

from gh_lab.core.exceptions import ValidationError
from gh_lab.core.random import generator, sample_sphere, sphere_points
from gh_lab.geometry.polytopes import polygon_vertices
from gh_lab.metric.helmet import euclidean_helmet_bound, helmet_extend, helmet_extend_euclidean, split_symmetric
from gh_lab.metric.space import FiniteMetricSpace


def _symmetric_space(half: np.ndarray, metric: str = "euclidean") -> FiniteMetricSpace:
    return FiniteMetricSpace.from_points(np.vstack([half, -half]), metric=metric, symmetric=True)


class TestEuclideanHelmet:
    """Test the chord-metric helmet inequality."""

    def test_bound_formula(self):
        assert euclidean_helmet_bound(0.0) == 0.0
        assert euclidean_helmet_bound(2.0) == 2.0
        assert euclidean_helmet_bound(1.0) == pytest.approx(np.sqrt(3.0))

    def test_extension_is_odd(self):
        half = sample_sphere(1, 10, 2)
        space = _symmetric_space(half)
        phi = sample_sphere(2, 10, 1)
        ext = helmet_extend_euclidean(space, range(10), phi)
        for i in range(10):
            assert np.array_equal(ext.image_of(space.involution[i]), -ext.image_of(i))

    def test_isometric_map_has_zero_distortion(self):
        half = polygon_vertices(8)[:4]
        space = _symmetric_space(half)
        ext = helmet_extend_euclidean(space, range(4), half)
        assert ext.base_distortion == 0.0
        assert ext.distortion <= 1e-12

    def test_random_trials_respect_bound(self):
        rng = generator(2024)
        for trial in range(1000):
            n = 1 + trial % 2
            size = int(rng.integers(2, 31))
            half = sphere_points(rng, size, 2)
            space = _symmetric_space(half)
            phi = sphere_points(rng, size, n)
            ext = helmet_extend_euclidean(space, range(size), phi)
            assert ext.distortion <= ext.bound + 1e-9

    def test_rejects_overlapping_subset(self):
        space = _symmetric_space(polygon_vertices(8)[:4])
        with pytest.raises(ValidationError):
            helmet_extend_euclidean(space, [0, 4], sample_sphere(3, 2, 1))

    def test_rejects_geodesic_domain(self):
        space = _symmetric_space(polygon_vertices(8)[:4], metric="geodesic")
        with pytest.raises(ValidationError):
            helmet_extend_euclidean(space, range(4), sample_sphere(3, 4, 1))


class TestGeodesicHelmet:
    def test_measures_without_bound(self):
        space = _symmetric_space(sample_sphere(5, 6, 2), metric="geodesic")
        ext = helmet_extend(space, split_symmetric(space), sample_sphere(6, 6, 1))
        assert ext.bound is None
        assert ext.distortion >= ext.base_distortion
        assert len(ext.indices) == 12

    def test_needs_involution(self):
        space = FiniteMetricSpace.from_points(sample_sphere(5, 4, 2), symmetric=False)
        with pytest.raises(ValidationError):
            helmet_extend(space, [0], sample_sphere(6, 1, 1))
