"""
Unit tests for the odd partition of unity.
"""

import numpy as np
import pytest

from gh_lab.complexes.partition import BarycentricPoint, PartitionOfUnity, partition_of_unity_map
from gh_lab.complexes.vietoris_rips import build_vr
from gh_lab.core.exceptions import CoverageError, ValidationError
from gh_lab.core.random import sample_sphere
from gh_lab.covering.net import symmetric_net
from gh_lab.geometry.points import geodesic_matrix
from gh_lab.geometry.polytopes import polygon_vertices
from gh_lab.metric.space import FiniteMetricSpace


class TestPartitionOfUnity:
    """Test weights, support and oddness."""

    def setup_method(self):
        self.net = symmetric_net(2, 0.25, seed=3)
        self.epsilon = 0.6
        self.partition = PartitionOfUnity(self.net, self.epsilon)

    def test_weights_sum_to_one(self):
        for point in self.partition.rows(sample_sphere(5, 10_000, 2)):
            assert abs(sum(point.weights) - 1.0) <= 1e-12

    def test_support_within_half_scale(self):
        ys = sample_sphere(6, 300, 2)
        for y, point in zip(ys, self.partition.rows(ys)):
            d = geodesic_matrix(y[None, :], self.net[list(point.support)])[0]
            assert np.all(d < self.epsilon / 2)

    def test_support_is_a_vr_simplex(self):
        space = FiniteMetricSpace.from_points(self.net)
        ys = sample_sphere(7, 200, 2)
        for point in self.partition.rows(ys):
            idx = list(point.support)
            assert space.dist[np.ix_(idx, idx)].max() < self.epsilon

    def test_odd(self):
        inv = self.partition.involution
        for y in sample_sphere(8, 500, 2):
            plus, minus = self.partition.at(y), self.partition.at(-y)
            assert sorted(inv[v] for v in plus.support) == list(minus.support)
            for v, w in zip(plus.support, plus.weights):
                assert minus.weight_of(int(inv[v])) == w

    def test_center_has_largest_weight(self):
        net = polygon_vertices(12)
        point = partition_of_unity_map(net, np.pi / 3, net[0])
        assert point.max_weight_vertices() == (0,)

    def test_uncovered_point(self):
        net = np.array([[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0]])
        with pytest.raises(CoverageError):
            partition_of_unity_map(net, 0.5, np.array([0.0, 0.0, 1.0]))

    def test_requires_symmetric_net(self):
        with pytest.raises(ValidationError):
            PartitionOfUnity(polygon_vertices(5), 1.0)

    def test_scale_range(self):
        with pytest.raises(ValidationError):
            PartitionOfUnity(polygon_vertices(6), np.pi)


class TestBarycentricPoint:
    def test_rejects_bad_weights(self):
        with pytest.raises(ValidationError):
            BarycentricPoint(support=(0, 1), weights=(0.5, 0.6))
        with pytest.raises(ValidationError):
            BarycentricPoint(support=(0,), weights=(1.0, 0.0))
