"""
Unit tests for point-set files.
"""

import numpy as np
import pytest

from gh_lab.core.exceptions import FileFormatError
from gh_lab.geometry.io import read_points, write_points
from gh_lab.geometry.polytopes import icosahedron_vertices


class TestPointFiles:
    """Test reading and writing point-set files."""

    def test_write_then_read(self, tmp_path):
        path = tmp_path / "ico.txt"
        pts = icosahedron_vertices()
        write_points(path, pts, symmetric=True)

        loaded, symmetric = read_points(path)
        assert symmetric is True
        assert np.array_equal(loaded, pts)
        assert path.read_text().splitlines()[0] == "dim=2 count=12 symmetric=1"

    def test_bad_header(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("points 3\n1 0\n")
        with pytest.raises(FileFormatError):
            read_points(path)

    def test_count_mismatch(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("dim=1 count=3 symmetric=0\n1 0\n0 1\n")
        with pytest.raises(FileFormatError) as exc_info:
            read_points(path)
        assert exc_info.value.details["expected"] == 3

    def test_false_symmetric_flag(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("dim=1 count=2 symmetric=1\n1 0\n0 1\n")
        with pytest.raises(FileFormatError):
            read_points(path)

    def test_non_unit_rows(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("dim=1 count=1 symmetric=0\n2 0\n")
        with pytest.raises(FileFormatError):
            read_points(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileFormatError):
            read_points(tmp_path / "nope.txt")
