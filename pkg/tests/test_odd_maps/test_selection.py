"""
Unit tests for odd vertex selection and the partition-of-unity pipeline.
"""

import numpy as np
import pytest

from gh_lab.complexes.partition import BarycentricPoint
from gh_lab.complexes.vietoris_rips import build_vr
from gh_lab.core.exceptions import FixedSimplexError, ValidationError
from gh_lab.core.random import sample_sphere
from gh_lab.geometry.polytopes import polygon_vertices
from gh_lab.metric.space import FiniteMetricSpace
from gh_lab.odd_maps.estimators import estimate_modulus
from gh_lab.odd_maps.selection import realization_to_function, selections, vr_pipeline_function, vr_vertex_select


@pytest.fixture
def hexagon_complex():
    space = FiniteMetricSpace.from_points(polygon_vertices(6))
    return build_vr(space, 2 * np.pi / 3, 3)


class TestVertexSelect:
    """Test the lexicographic odd selector."""

    def test_selects_a_vertex(self, hexagon_complex):
        selector = vr_vertex_select(hexagon_complex)
        for simplex, vertex in selections(hexagon_complex, selector).items():
            assert vertex in simplex

    def test_singletons(self, hexagon_complex):
        selector = vr_vertex_select(hexagon_complex)
        assert all(selector.select((v,)) == v for v in range(6))

    def test_odd_on_every_simplex(self, hexagon_complex):
        selector = vr_vertex_select(hexagon_complex)
        inv = hexagon_complex.base.involution
        for simplex in hexagon_complex.simplices:
            mirrored = tuple(sorted(inv[v] for v in simplex))
            assert selector.select(mirrored) == inv[selector.select(simplex)]

    def test_deterministic(self, hexagon_complex):
        first = selections(hexagon_complex, vr_vertex_select(hexagon_complex))
        second = selections(hexagon_complex, vr_vertex_select(hexagon_complex))
        assert first == second

    def test_fixed_simplex(self):
        space = FiniteMetricSpace.from_points(polygon_vertices(6))
        with pytest.raises(FixedSimplexError):
            vr_vertex_select(build_vr(space, np.pi, 2))


class TestRealization:
    def setup_method(self):
        space = FiniteMetricSpace.from_points(polygon_vertices(6))
        self.complex = build_vr(space, 2 * np.pi / 3, 3)
        self.selector = vr_vertex_select(self.complex)

    def test_concentrated_point(self):
        f = realization_to_function(lambda x: BarycentricPoint(support=(2,), weights=(1.0,)), self.selector)
        assert f(np.zeros(2)) == 2

    def test_tie_uses_selector(self):
        f = realization_to_function(lambda x: BarycentricPoint(support=(0, 1), weights=(0.5, 0.5)), self.selector)
        assert f(np.zeros(2)) == self.selector.select((0, 1))

    def test_support_outside_complex(self):
        f = realization_to_function(lambda x: BarycentricPoint(support=(0, 3), weights=(0.5, 0.5)),
                                    self.selector, self.complex)
        with pytest.raises(ValidationError):
            f(np.zeros(2))


class TestPipeline:
    @pytest.mark.parametrize("epsilon", [0.5, 0.3, 0.15])
    def test_modulus_shrinks_with_scale(self, epsilon):
        f = vr_pipeline_function(2, epsilon, seed=4)
        points = sample_sphere(17, 20_000, 2)
        assert f.oddness_violations(points[:2000]) == 0
        estimate = estimate_modulus(f, 0.005, points=points)
        assert estimate.delta_hat <= epsilon + 2e-2

    @pytest.mark.slow
    def test_full_sample(self):
        f = vr_pipeline_function(2, 0.3, seed=4)
        estimate = estimate_modulus(f, 0.005, samples=100_000, seed=18)
        assert estimate.delta_hat <= 0.3 + 2e-2

    def test_images_are_net_points(self):
        f = vr_pipeline_function(1, 0.5, seed=2)
        images = f(sample_sphere(3, 200, 1))
        assert np.allclose(np.linalg.norm(images, axis=1), 1.0)

    def test_scale_range(self):
        with pytest.raises(ValidationError):
            vr_pipeline_function(2, np.pi)
