"""
Unit tests for the hemisphere correspondence.
"""

import math

import numpy as np
import pytest

from gh_lab.bounds.hemisphere import EQUATOR, HemisphereCorrespondence, verify_distortion
from gh_lab.core.exceptions import ValidationError
from gh_lab.geometry.constants import r_n
from gh_lab.geometry.points import SpherePoint


class TestClassification:
    """Test the E / C_i partition."""

    def setup_method(self):
        self.correspondence = HemisphereCorrespondence(1)
        self.frame = self.correspondence.frame

    def test_equator_is_in_e(self):
        assert self.correspondence.classify(SpherePoint(coords=[0.6, 0.8, 0.0])) == EQUATOR

    def test_apex_is_in_first_cone(self):
        assert self.correspondence.classify(SpherePoint(coords=[0.0, 0.0, 1.0])) == 1

    def test_cap_boundary_is_closed(self):
        direction = -self.frame.vertex(2)
        p = np.append(math.sqrt(0.75) * direction, 0.5)
        assert self.correspondence.classify_rows(p[None, :])[0] == 2

    def test_just_outside_cap(self):
        direction = -self.frame.vertex(2)
        height = math.cos(math.pi / 3 + 1e-6)
        p = np.append(math.sqrt(1 - height ** 2) * direction, height)
        assert self.correspondence.classify_rows(p[None, :])[0] == EQUATOR

    def test_lower_hemisphere_rejected(self):
        with pytest.raises(ValidationError):
            self.correspondence.classify(SpherePoint(coords=[0.0, 0.6, -0.8]))


class TestCorrespond:
    def setup_method(self):
        self.correspondence = HemisphereCorrespondence(2)

    def test_equator_maps_to_itself(self):
        image = self.correspondence.correspond(SpherePoint(coords=[0.0, 0.6, 0.8, 0.0]))
        assert np.allclose(image.vector, [0.0, 0.6, 0.8])

    def test_apex_maps_to_antipodal_vertex(self):
        image = self.correspondence.correspond(SpherePoint(coords=[0.0, 0.0, 0.0, 1.0]))
        assert np.allclose(image.vector, -self.correspondence.frame.vertex(1))

    def test_thickened_equator_uses_tau(self):
        height = math.cos(1.2)
        p = np.array([math.sin(1.2), 0.0, 0.0, height])
        image = self.correspondence.correspond_rows(p[None, :])[0]
        assert np.allclose(image, [1.0, 0.0, 0.0])


class TestVerifyDistortion:
    def test_near_tight_for_circle(self):
        report = verify_distortion(1, samples=100_000, seed=7)
        assert report.passed
        assert report.max_distortion <= 2 * math.pi / 3 + 1e-9
        assert report.max_distortion >= r_n(1) - 0.05

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_bound_holds(self, n):
        report = verify_distortion(n, samples=100_000, seed=11)
        assert report.max_distortion <= 2 * math.pi / 3 + 1e-9
        assert report.cases["E/E"].maximum <= math.pi / 3 + 1e-9
        assert sum(case.count for case in report.cases.values()) == 100_000

    def test_deterministic(self):
        first = verify_distortion(2, samples=5000, seed=3)
        second = verify_distortion(2, samples=5000, seed=3)
        assert first == second

    def test_needs_samples(self):
        with pytest.raises(ValidationError):
            verify_distortion(1, samples=0)
