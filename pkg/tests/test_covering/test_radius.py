"""
Unit tests for covering radii and symmetric nets.
"""

import math

import numpy as np
import pytest

from gh_lab.core.exceptions import CoverageError, ValidationError
from gh_lab.covering.net import symmetric_net, symmetric_net_of_size
from gh_lab.covering.radius import covering_radius, measure_covering
from gh_lab.geometry.constants import CELL600_COVER_RADIUS, ICOSAHEDRON_COVER_RADIUS, r_n
from gh_lab.geometry.polytopes import cell600_vertices, icosahedron_vertices, inscribed_simplex


class TestCoveringRadius:
    """Test empirical covering radii."""

    @pytest.mark.slow
    def test_icosahedron(self):
        radius = covering_radius(icosahedron_vertices(), samples=1_000_000, seed=1)
        assert 0.647 <= radius <= 0.654
        assert ICOSAHEDRON_COVER_RADIUS - 5e-3 <= radius <= ICOSAHEDRON_COVER_RADIUS + 1e-3

    @pytest.mark.slow
    def test_600_cell(self):
        radius = covering_radius(cell600_vertices(), samples=1_000_000, seed=2)
        assert 0.355 <= radius <= 0.366
        assert radius <= CELL600_COVER_RADIUS + 1e-3

    @pytest.mark.parametrize("n", [1, 2])
    def test_simplex_vertices(self, n):
        radius = covering_radius(inscribed_simplex(n).vertices, samples=100_000, seed=3)
        expected = math.pi - r_n(n)
        assert expected - 0.03 <= radius <= expected + 1e-9

    def test_projective_quotient_never_larger(self):
        centers = symmetric_net_of_size(2, 10, seed=4)
        sphere = covering_radius(centers, samples=20_000, seed=5)
        projective = covering_radius(centers[::2], projective=True, samples=20_000, seed=5)
        assert projective <= sphere + 1e-12

    def test_monotone_in_centers(self):
        net = symmetric_net_of_size(2, 16, seed=6)
        radii = [covering_radius(net[:m], samples=10_000, seed=7) for m in (4, 8, 12, 16)]
        assert all(a >= b for a, b in zip(radii, radii[1:]))

    def test_empty_centers(self):
        with pytest.raises(ValidationError):
            covering_radius(np.zeros((0, 3)))

    def test_worst_point_is_reported(self):
        result = measure_covering(np.array([[1.0, 0.0], [-1.0, 0.0]]), samples=5_000, seed=8)
        assert abs(result.worst_point[0]) < 0.01
        assert result.radius == pytest.approx(math.pi / 2, abs=0.01)


class TestSymmetricNet:
    """Test greedy symmetric nets."""

    def test_circle(self):
        net = symmetric_net(1, math.pi / 3, seed=1)
        assert np.array_equal(net[1::2], -net[::2])
        assert covering_radius(net, samples=10_000, seed=2) < math.pi / 3

    def test_zero_sphere(self):
        assert np.array_equal(symmetric_net(0, 0.1), np.array([[1.0], [-1.0]]))

    def test_two_sphere(self):
        net = symmetric_net(2, 0.5, seed=3)
        assert np.array_equal(net[1::2], -net[::2])
        assert covering_radius(net, samples=100_000, seed=4) < 0.5

    def test_three_sphere_on_fresh_samples(self):
        net = symmetric_net(3, 0.6, seed=11, validation_samples=200_000)
        assert np.array_equal(net[1::2], -net[::2])
        assert covering_radius(net, samples=100_000, seed=12) < 0.6

    def test_sparse_candidates_are_refined(self):
        greedy = symmetric_net(2, 0.5, seed=13, candidates=20, validation_samples=0)
        assert covering_radius(greedy, samples=20_000, seed=14) >= 0.5

        net = symmetric_net(2, 0.5, seed=13, candidates=20, validation_samples=20_000)
        assert np.array_equal(net[: len(greedy)], greedy)
        assert np.array_equal(net[1::2], -net[::2])
        assert covering_radius(net, samples=20_000, seed=14) < 0.5

    def test_uncovered_net_raises(self):
        with pytest.raises(CoverageError):
            symmetric_net(3, 0.3, seed=15, candidates=2, validation_samples=10_000, refinements=0)

    def test_rejects_non_positive_epsilon(self):
        with pytest.raises(ValidationError):
            symmetric_net(2, 0.0)

    def test_fixed_size(self):
        assert symmetric_net_of_size(3, 12, seed=5).shape == (12, 4)

    def test_fixed_size_must_be_even(self):
        with pytest.raises(ValidationError):
            symmetric_net_of_size(2, 7)
