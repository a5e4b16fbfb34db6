"""
Unit tests for settings and run configuration.
"""

import pytest

from gh_lab.core.config import (
    CONFIG_FILE_NAME,
    DEFAULT_SEED,
    LabSettings,
    RunConfig,
    find_config_file,
    get_settings,
    set_settings,
)
from gh_lab.core.exceptions import ConfigurationError


class TestLabSettings:
    """Test settings loading and precedence."""

    def test_defaults(self):
        settings = LabSettings()
        assert settings.seed == DEFAULT_SEED
        assert settings.gh_max_cells == 25
        assert settings.json_digits == 12

    def test_yaml_file_values(self, tmp_path):
        path = tmp_path / CONFIG_FILE_NAME
        path.write_text("threads: 2\nsimplex_budget: 1000\n")
        settings = LabSettings.load(path)
        assert settings.threads == 2
        assert settings.simplex_budget == 1000

    def test_env_overrides_file(self, tmp_path, monkeypatch):
        path = tmp_path / CONFIG_FILE_NAME
        path.write_text("threads: 2\n")
        monkeypatch.setenv("GH_LAB_THREADS", "3")
        assert LabSettings.load(path).threads == 3

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / CONFIG_FILE_NAME
        path.write_text("threads: [unclosed\n")
        with pytest.raises(ConfigurationError):
            LabSettings.load(path)

    def test_invalid_value(self, tmp_path):
        path = tmp_path / CONFIG_FILE_NAME
        path.write_text("threads: 0\n")
        with pytest.raises(ConfigurationError) as exc_info:
            LabSettings.load(path)
        assert exc_info.value.details["errors"]

    def test_missing_explicit_file(self, tmp_path):
        with pytest.raises(ConfigurationError):
            LabSettings.load(tmp_path / "absent.yaml")

    def test_find_config_walks_up(self, tmp_path):
        (tmp_path / CONFIG_FILE_NAME).write_text("seed: 1\n")
        nested = tmp_path / "a" / "b"
        nested.mkdir(parents=True)
        assert find_config_file(nested) == tmp_path / CONFIG_FILE_NAME

    def test_set_and_get_settings(self):
        custom = LabSettings(threads=1, seed=5)
        set_settings(custom)
        try:
            assert get_settings() is custom
        finally:
            set_settings(None)


class TestRunConfig:
    """Test CLI invocation validation."""

    def test_construction_is_normalized(self):
        config = RunConfig(subcommand="odd-map", construction="Cone-Vertex")
        assert config.construction == "cone_vertex"

    def test_rejects_non_positive_samples(self):
        with pytest.raises(Exception):
            RunConfig(subcommand="covering", samples=0)

    def test_rejects_unknown_subcommand(self):
        with pytest.raises(Exception):
            RunConfig(subcommand="plot")

    def test_seed_defaults_to_constant(self):
        assert RunConfig(subcommand="constants").seed == DEFAULT_SEED
