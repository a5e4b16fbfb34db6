"""
Unit tests for FiniteMetricSpace and Relation.
"""

import math

import numpy as np
import pytest

from gh_lab.core.exceptions import ValidationError
from gh_lab.core.random import sample_sphere
from gh_lab.geometry.polytopes import polygon_vertices
from gh_lab.metric.space import FiniteMetricSpace, Relation


class TestFiniteMetricSpace:
    """Test construction and validation."""

    def setup_method(self):
        self.hexagon = FiniteMetricSpace.from_points(polygon_vertices(6))

    def test_hexagon_detects_involution(self):
        assert self.hexagon.is_symmetric
        assert self.hexagon.involution == (3, 4, 5, 0, 1, 2)

    def test_involution_is_exact(self):
        inv = np.asarray(self.hexagon.involution)
        assert np.array_equal(self.hexagon.dist[np.ix_(inv, inv)], self.hexagon.dist)

    def test_rejects_triangle_violation(self):
        d = np.array([[0.0, 1.0, 5.0], [1.0, 0.0, 1.0], [5.0, 1.0, 0.0]])
        with pytest.raises(ValidationError):
            FiniteMetricSpace.from_matrix(d)

    def test_rejects_asymmetric_matrix(self):
        with pytest.raises(ValidationError):
            FiniteMetricSpace.from_matrix(np.array([[0.0, 1.0], [2.0, 0.0]]))

    def test_rejects_nonzero_diagonal(self):
        with pytest.raises(ValidationError):
            FiniteMetricSpace.from_matrix(np.array([[1.0, 1.0], [1.0, 0.0]]))

    def test_rejects_bad_involution(self):
        d = np.array([[0.0, 1.0, 2.0], [1.0, 0.0, 1.0], [2.0, 1.0, 0.0]])
        with pytest.raises(ValidationError):
            FiniteMetricSpace.from_matrix(d, involution=[1, 0, 2])

    def test_forced_symmetry_on_asymmetric_sample(self):
        with pytest.raises(ValidationError):
            FiniteMetricSpace.from_points(sample_sphere(1, 5, 2), symmetric=True)

    def test_euclidean_metric(self):
        space = FiniteMetricSpace.from_points(polygon_vertices(4), metric="euclidean")
        assert space.dist[0, 2] == pytest.approx(2.0)
        assert space.dist[0, 1] == pytest.approx(math.sqrt(2.0))


class TestDiameter:
    def setup_method(self):
        self.hexagon = FiniteMetricSpace.from_points(polygon_vertices(6))

    def test_singleton(self):
        assert self.hexagon.diameter([2]) == 0.0

    def test_whole_hexagon(self):
        assert self.hexagon.diameter() == pytest.approx(math.pi, abs=1e-12)

    def test_antipodal_pair(self):
        assert self.hexagon.diameter([1, 4]) == pytest.approx(math.pi, abs=1e-12)

    def test_empty_subset(self):
        with pytest.raises(ValidationError):
            self.hexagon.diameter([])


class TestHausdorff:
    def setup_method(self):
        self.hexagon = FiniteMetricSpace.from_points(polygon_vertices(6))

    def test_equal_sets(self):
        assert self.hexagon.hausdorff_distance([0, 2, 4], [4, 2, 0]) == 0.0

    def test_point_versus_pair(self):
        d = self.hexagon.dist[0, 1]
        assert self.hexagon.hausdorff_distance([0], [0, 1]) == d

    def test_alternate_vertices(self):
        value = self.hexagon.hausdorff_distance(range(6), [0, 2, 4])
        assert value == pytest.approx(math.pi / 3, abs=1e-12)

    def test_empty_input(self):
        with pytest.raises(ValidationError):
            self.hexagon.hausdorff_distance([], [1])


class TestRelation:
    """Test relations and correspondences."""

    def test_correspondence_flag(self):
        assert Relation.of([(0, 0), (1, 0)], 2, 1).is_correspondence
        assert not Relation.of([(0, 0)], 2, 1).is_correspondence

    def test_empty_relation_rejected(self):
        with pytest.raises(ValidationError):
            Relation.of([], 2, 2)

    def test_out_of_range(self):
        with pytest.raises(ValidationError):
            Relation.of([(0, 3)], 2, 2)

    def test_duplicates_removed(self):
        assert len(Relation.of([(0, 1), (0, 1), (1, 0)], 2, 2)) == 2

    def test_transpose(self):
        rel = Relation.of([(0, 1), (1, 0), (1, 2)], 2, 3)
        assert rel.transpose().pairs == ((0, 1), (1, 0), (2, 1))
