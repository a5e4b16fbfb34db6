"""
Unit tests for homology over the two-element field and barycentric subdivision.
"""

import numpy as np
import pytest

from gh_lab.complexes.homology import f2_homology, reduce_rank
from gh_lab.complexes.simplicial import SimplicialComplex, full_simplex, read_simplices
from gh_lab.complexes.subdivision import barycentric_subdivision
from gh_lab.complexes.vietoris_rips import build_vr
from gh_lab.core.exceptions import BudgetExceededError, ValidationError
from gh_lab.core.random import sample_sphere
from gh_lab.geometry.polytopes import polygon_vertices
from gh_lab.metric.space import FiniteMetricSpace


def _polygon(m: int) -> FiniteMetricSpace:
    return FiniteMetricSpace.from_points(polygon_vertices(m))


def _triangle_boundary() -> SimplicialComplex:
    return SimplicialComplex([(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)], check_closed=True)


class TestHomology:
    """Test Betti numbers on complexes with known homology."""

    def test_hexagon(self):
        betti = f2_homology(build_vr(_polygon(6), np.pi / 3, 2), 2)
        assert betti.values == [1, 1, 0]

    def test_hendecagon_is_a_three_sphere(self):
        vr = build_vr(_polygon(11), 8 * np.pi / 11, 5)
        assert f2_homology(vr, 4).values == [1, 0, 0, 1, 0]

    def test_full_simplex(self):
        assert f2_homology(full_simplex(5), 4).values == [1, 0, 0, 0, 0]

    def test_two_points(self):
        space = FiniteMetricSpace.from_points(np.array([[1.0, 0.0], [-1.0, 0.0]]))
        assert f2_homology(build_vr(space, 1.0, 1), 0).values == [2]

    def test_dimension_not_built(self):
        vr = build_vr(_polygon(6), np.pi, 2)
        with pytest.raises(ValidationError):
            f2_homology(vr, 2)

    def test_euler_characteristic_matches(self):
        points = sample_sphere(31, 14, 2)
        for r in (0.6, 0.9, 1.3):
            vr = build_vr(FiniteMetricSpace.from_points(points), r, 14)
            betti = f2_homology(vr, vr.dimension)
            assert betti.euler_characteristic() == vr.euler_characteristic()

    def test_rank(self):
        assert reduce_rank([0b011, 0b110, 0b101]) == 2
        assert reduce_rank([]) == 0


class TestSubdivision:
    def test_edge_becomes_path(self):
        sd = barycentric_subdivision(SimplicialComplex([(0,), (1,), (0, 1)]))
        assert sd.f_vector() == [3, 2]
        assert sd.barycenters[2] == (0, 1)

    def test_triangle_boundary_becomes_hexagon(self):
        sd = barycentric_subdivision(_triangle_boundary())
        assert sd.f_vector() == [6, 6]
        assert f2_homology(sd, 1).values == [1, 1]

    def test_hexagon_becomes_twelve_cycle(self):
        sd = barycentric_subdivision(build_vr(_polygon(6), np.pi / 3, 2))
        assert sd.f_vector() == [12, 12]
        assert f2_homology(sd, 1).values == [1, 1]

    def test_preserves_betti_numbers(self):
        space = FiniteMetricSpace.from_points(sample_sphere(41, 9, 2))
        for r in (0.8, 1.2):
            vr = build_vr(space, r, 9)
            if len(vr) > 200:
                continue
            d = vr.dimension
            assert f2_homology(barycentric_subdivision(vr), d).values == f2_homology(vr, d).values

    def test_truncated_complex_keeps_homology_limit(self):
        vr = build_vr(_polygon(6), np.pi, 2)
        assert vr.max_dim == 2
        sd = barycentric_subdivision(vr)
        assert sd.max_dim == 2
        assert f2_homology(sd, 1).values == f2_homology(vr, 1).values == [1, 0]
        with pytest.raises(ValidationError):
            f2_homology(sd, 2)

    def test_full_triangle(self):
        sd = barycentric_subdivision(full_simplex(3))
        assert sd.f_vector() == [7, 12, 6]

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            barycentric_subdivision(full_simplex(4), budget=20)


class TestSimplicialComplex:
    def test_closure_check(self):
        with pytest.raises(ValidationError):
            SimplicialComplex([(0,), (0, 1)], check_closed=True)

    def test_read_back(self, tmp_path):
        path = tmp_path / "tri.txt"
        _triangle_boundary().export_simplices(path)
        assert read_simplices(path).simplices == _triangle_boundary().simplices
