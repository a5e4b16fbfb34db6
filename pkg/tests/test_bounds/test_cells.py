"""
Unit tests for c_{n,k} lower bounds and table cells.
"""

import math

import pytest

from gh_lab.bounds.cells import c_lower, euclidean_cell, gh_cell, known_facts, prior_lower_bound
from gh_lab.core.exceptions import ValidationError
from gh_lab.covering.certificates import icosahedron_certificate
from gh_lab.geometry.constants import r_n


class TestCLower:
    """Test the fact registry and monotone propagation."""

    def test_circle_into_five_sphere(self):
        bound = c_lower(1, 5)
        assert bound.value == pytest.approx(4 * math.pi / 5)
        assert bound.value == pytest.approx(2.5132741, abs=1e-7)
        assert bound.provenance == "c_{1,2ℓ+1} theorem"
        assert bound.label == "4π/5"

    def test_adjacent_dimension(self):
        bound = c_lower(3, 4)
        assert bound.value == pytest.approx(1.8234766, abs=1e-7)
        assert bound.label == "r_3"

    def test_remark_value(self):
        bound = c_lower(2, 7)
        assert bound.value == pytest.approx(2.0344439, abs=1e-7)
        assert bound.label == "c_{2,7}"

    def test_propagated_value_is_symbolic(self):
        bound = c_lower(2, 5)
        assert bound.value == pytest.approx(r_n(2))
        assert bound.label == "c_{2,5}"
        assert bound.source in [(2, 3), (2, 4)]

    def test_diagonal(self):
        assert c_lower(3, 3).value == 0.0

    def test_monotone_in_k(self):
        for n in range(1, 6):
            values = [c_lower(n, k).value for k in range(n, 13)]
            assert values == sorted(values)

    def test_never_worse_than_prior_bound(self):
        for n in range(1, 7):
            for k in range(n + 1, 8):
                assert c_lower(n, k).value >= prior_lower_bound(n, k) - 1e-12

    def test_rejects_k_below_n(self):
        with pytest.raises(ValidationError):
            c_lower(3, 2)

    def test_registry_contains_covering_facts(self):
        provenances = {f.provenance for f in known_facts(7)}
        assert "RP^1 covering (grid)" in provenances
        assert "RP^2 covering (icosahedron)" in provenances


class TestGhCell:
    def test_exact_cells(self):
        assert gh_cell(1, 2).render() == "2π/3"
        assert gh_cell(1, 3).render() == "2π/3"
        cell = gh_cell(2, 3)
        assert cell.exact and cell.lower == cell.upper == pytest.approx(r_n(2))
        assert cell.render() == "r_2"

    def test_superdiagonal_upper_bound(self):
        cell = gh_cell(3, 4)
        assert cell.render() == "[r_3, 2π/3]"
        assert cell.upper == pytest.approx(2 * math.pi / 3)
        assert not cell.upper_open

    def test_open_upper_bound(self):
        assert gh_cell(1, 4).render() == "[4π/5, π)"
        assert gh_cell(2, 6).render() == "[c_{2,6}, π)"

    def test_lower_below_upper_everywhere(self):
        for n in range(0, 13):
            for k in range(n, 13):
                cell = gh_cell(n, k)
                assert 0.0 <= cell.lower <= cell.upper <= math.pi

    def test_diagonal(self):
        cell = gh_cell(4, 4)
        assert (cell.lower, cell.upper, cell.render()) == (0.0, 0.0, "0")


class TestEuclideanCell:
    def test_values(self):
        assert euclidean_cell(1, 2).lower == pytest.approx(1.0)
        assert euclidean_cell(2, 2).lower == 0.0
        assert euclidean_cell(1, 2).upper == 2.0

    def test_grows_with_k(self):
        lows = [euclidean_cell(1, k).lower for k in range(2, 13)]
        assert lows == sorted(lows)
        assert lows[-1] < 2.0


class TestPriorBound:
    def test_icosahedron_does_not_beat_r2(self):
        assert prior_lower_bound(2, 11, [icosahedron_certificate()]) == pytest.approx(r_n(2))

    def test_needs_k_above_n(self):
        with pytest.raises(ValidationError):
            prior_lower_bound(2, 2)
