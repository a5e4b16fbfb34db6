"""
Tests for the gh-lab command line.
"""

import json
import math

import numpy as np
import pytest
from typer.testing import CliRunner

from gh_lab import __version__
from gh_lab.cli.main import app
from gh_lab.core.config import set_settings
from gh_lab.geometry.io import write_points
from gh_lab.geometry.polytopes import polygon_vertices
from gh_lab.metric.io import write_distance_matrix
from gh_lab.metric.space import FiniteMetricSpace

runner = CliRunner()

SUBCOMMANDS = ["table", "verify-theorem1", "covering", "vr-homology", "oracle-gh", "odd-map", "constants"]


def _invoke(*args: str):
    return runner.invoke(app, list(args))


class TestApp:
    """Test the top-level application."""

    def test_help_lists_subcommands(self):
        result = _invoke("--help")
        assert result.exit_code == 0
        for name in SUBCOMMANDS:
            assert name in result.output

    def test_version(self):
        result = _invoke("--version")
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_info(self):
        result = _invoke("info")
        assert result.exit_code == 0
        assert "Simplex Budget" in result.output

    @pytest.mark.parametrize("name", SUBCOMMANDS)
    def test_subcommand_help(self, name):
        result = _invoke(name, "--help")
        assert result.exit_code == 0
        assert "--format" in result.output


class TestTableCommand:
    """Test the bounds table subcommand."""

    def setup_method(self):
        set_settings(None)

    def test_markdown_table(self, tmp_path):
        out = tmp_path / "table.md"
        result = _invoke("table", "--max-n", "7", "--max-k", "7", "--format", "markdown", "-o", str(out))
        assert result.exit_code == 0

        text = out.read_text()
        assert text.startswith("# Bounds on 2·d_GH(S^n, S^k)")
        assert "| 1 | 0 | 2π/3 | 2π/3 |" in text
        assert "c_{2,7} >= 2.0344439358" in text

    def test_json_table(self, tmp_path):
        out = tmp_path / "table.json"
        result = _invoke("table", "--max-n", "3", "--max-k", "4", "-o", str(out))
        assert result.exit_code == 0
        payload = json.loads(out.read_text())
        assert payload["max_n"] == 3

    def test_unknown_format(self):
        result = _invoke("table", "--format", "yaml")
        assert result.exit_code == 2

    def test_unknown_metric(self):
        result = _invoke("table", "--metric", "taxicab")
        assert result.exit_code == 2


class TestTheoremCommand:
    """Test the hemisphere correspondence check."""

    def setup_method(self):
        set_settings(None)

    def test_bound_holds(self, tmp_path):
        out = tmp_path / "theorem.json"
        result = _invoke("verify-theorem1", "--n", "2", "--samples", "20000", "--seed", "7", "-o", str(out))
        assert result.exit_code == 0

        payload = json.loads(out.read_text())
        assert payload["passed"] is True
        assert payload["max_distortion"] <= 2.0943952

    def test_reruns_are_byte_identical(self, tmp_path):
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        for out in (first, second):
            result = _invoke("verify-theorem1", "--n", "1", "--samples", "4000", "--seed", "3", "-o", str(out))
            assert result.exit_code == 0
        assert first.read_bytes() == second.read_bytes()

    def test_markdown_report(self, tmp_path):
        out = tmp_path / "theorem.md"
        result = _invoke("verify-theorem1", "--n", "1", "--samples", "2000", "--format", "markdown", "-o", str(out))
        assert result.exit_code == 0
        text = out.read_text()
        assert text.startswith("# Hemisphere correspondence S^2 vs S^1")
        assert "| case | maximum | count |" in text

    def test_zero_samples_rejected(self):
        result = _invoke("verify-theorem1", "--n", "1", "--samples", "0")
        assert result.exit_code == 2


class TestHomologyCommand:
    """Test Betti numbers from a point-set file."""

    def setup_method(self):
        set_settings(None)

    def test_hendecagon(self, tmp_path):
        points = tmp_path / "hendecagon.txt"
        write_points(points, polygon_vertices(11))
        out = tmp_path / "betti.json"

        result = _invoke("vr-homology", "--points", str(points), "--r", repr(8 * math.pi / 11),
                         "--max-dim", "4", "-o", str(out))
        assert result.exit_code == 0
        assert json.loads(out.read_text())["betti"] == [1, 0, 0, 1, 0]

    def test_export(self, tmp_path):
        points = tmp_path / "hexagon.txt"
        write_points(points, polygon_vertices(6), symmetric=True)
        export = tmp_path / "simplices.txt"

        result = _invoke("vr-homology", "--points", str(points), "--r", repr(math.pi / 3),
                         "--max-dim", "1", "--export", str(export), "-o", str(tmp_path / "out.json"))
        assert result.exit_code == 0
        lines = export.read_text().splitlines()
        assert len(lines) == 12

    def test_missing_points_file(self, tmp_path):
        result = _invoke("vr-homology", "--points", str(tmp_path / "missing.txt"), "--r", "1.0")
        assert result.exit_code == 2

    def test_budget_exceeded(self, tmp_path):
        points = tmp_path / "hendecagon.txt"
        write_points(points, polygon_vertices(11))
        result = _invoke("vr-homology", "--points", str(points), "--r", repr(8 * math.pi / 11),
                         "--max-dim", "4", "--budget", "20")
        assert result.exit_code == 3


class TestOracleCommand:
    """Test the exact Gromov–Hausdorff oracle."""

    def setup_method(self):
        set_settings(None)

    def _write(self, path, dist):
        write_distance_matrix(path, FiniteMetricSpace.from_matrix(np.array(dist, dtype=float)))
        return str(path)

    def test_two_point_spaces(self, tmp_path):
        x = self._write(tmp_path / "x.txt", [[0, 2], [2, 0]])
        y = self._write(tmp_path / "y.txt", [[0, 1], [1, 0]])
        out = tmp_path / "gh.json"

        result = _invoke("oracle-gh", "--x", x, "--y", y, "-o", str(out))
        assert result.exit_code == 0
        assert json.loads(out.read_text())["value"] == pytest.approx(0.5)

    def test_budget_exit_code(self, tmp_path):
        x = self._write(tmp_path / "x.txt", [[0, 1], [1, 0]])
        y = self._write(tmp_path / "y.txt", [[0, 1, 1], [1, 0, 1], [1, 1, 0]])
        result = _invoke("oracle-gh", "--x", x, "--y", y, "--budget", "4")
        assert result.exit_code == 3


class TestOddMapCommand:
    """Test estimates for named odd functions."""

    def setup_method(self):
        set_settings(None)

    def test_equatorial_helmet(self, tmp_path):
        out = tmp_path / "helmet.json"
        result = _invoke("odd-map", "--construction", "equatorial_helmet", "--n", "1",
                         "--samples", "100000", "--eta", "0.05", "--seed", "5", "-o", str(out))
        assert result.exit_code == 0

        payload = json.loads(out.read_text())
        assert payload["oddness_violations"] == 0
        assert payload["source_dim"] == 2
        assert payload["target_dim"] == 1
        assert payload["delta_hat"] >= 2 * math.pi / 3
        assert set(payload) >= {"delta_hat", "dis_hat", "oddness_violations"}

    @pytest.mark.parametrize("construction, dims", [
        ("equatorial_helmet", ["--n", "2"]),
        ("cone_vertex", ["--n", "2"]),
        ("linear_project_nearest", ["--n", "1", "--k", "3"]),
    ])
    def test_distortion_bounds_modulus(self, tmp_path, construction, dims):
        out = tmp_path / "estimates.json"
        result = _invoke("odd-map", "--construction", construction, *dims,
                         "--samples", "20000", "--eta", "0.05", "--seed", "11", "-o", str(out))
        assert result.exit_code == 0

        payload = json.loads(out.read_text())
        assert payload["delta_hat"] <= payload["dis_hat"] + 2 * payload["eta"] + 1e-9

    def test_unknown_construction(self):
        result = _invoke("odd-map", "--construction", "spiral", "--n", "1", "--samples", "100")
        assert result.exit_code == 2


class TestCoveringCommand:
    """Test covering certificates."""

    def setup_method(self):
        set_settings(None)

    def test_icosahedron_projective(self, tmp_path):
        out = tmp_path / "cover.json"
        result = _invoke("covering", "--construction", "icosahedron", "--projective",
                         "--samples", "20000", "-o", str(out))
        assert result.exit_code == 0

        payload = json.loads(out.read_text())
        assert payload["space"] == "RP^2"
        assert payload["k"] == 6
        assert payload["passed"] is True
        assert payload["lower_bound"]["value"] == pytest.approx(math.pi - 2 * payload["radius_bound"])

    def test_grid_needs_even_count(self):
        result = _invoke("covering", "--construction", "grid", "--k", "5")
        assert result.exit_code == 2


class TestConstantsCommand:
    """Test the constants listing."""

    def setup_method(self):
        set_settings(None)

    def test_constants(self, tmp_path):
        out = tmp_path / "constants.json"
        result = _invoke("constants", "--max-n", "3", "--max-k", "4", "-o", str(out))
        assert result.exit_code == 0

        payload = json.loads(out.read_text())
        assert [row["n"] for row in payload["constants"]] == [1, 2, 3]
        assert payload["constants"][0]["r_n"] == pytest.approx(2 * math.pi / 3, abs=1e-11)
        assert payload["constants"][1]["t_n"] == pytest.approx(math.acos(-math.sqrt(1 / 3)), abs=1e-11)
        assert any(fact["label"] == "2π/3" for fact in payload["known_facts"])

    def test_csv(self, tmp_path):
        out = tmp_path / "constants.csv"
        result = _invoke("constants", "--max-n", "2", "--format", "csv", "-o", str(out))
        assert result.exit_code == 0
        assert out.read_text().splitlines()[0] == "n,r_n,t_n"

    def test_config_file(self, tmp_path):
        config = tmp_path / "gh-lab.yaml"
        config.write_text("json_digits: 4\n")
        out = tmp_path / "constants.json"
        result = _invoke("constants", "--max-n", "1", "--config", str(config), "-o", str(out))
        set_settings(None)
        assert result.exit_code == 0
        assert json.loads(out.read_text())["constants"][0]["r_n"] == 2.094

    def test_bad_config_file(self, tmp_path):
        config = tmp_path / "gh-lab.yaml"
        config.write_text("threads: 0\n")
        result = _invoke("constants", "--config", str(config))
        set_settings(None)
        assert result.exit_code == 2
