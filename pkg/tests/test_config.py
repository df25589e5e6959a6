# tests/test_config.py

import logging

import pytest

from lieinv.config import BannerFormatter, load_settings, setup_logging
from lieinv.errors import ConfigError


def test_defaults(tmp_path):
    settings = load_settings(tmp_path / "missing.env")
    assert settings.verify_grid == "small"
    assert settings.random_j == 200
    assert settings.tables_path.name == "paper_tables.yaml"


def test_env_file_is_read(tmp_path):
    env = tmp_path / ".env"
    env.write_text("LIEINV_VERIFY_GRID=default\nLIEINV_GRID_CAP=5000\n", encoding="utf-8")
    settings = load_settings(env)
    assert settings.verify_grid == "default"
    assert settings.grid_cap == 5000


def test_environment_wins_over_env_file(tmp_path, monkeypatch):
    env = tmp_path / ".env"
    env.write_text("LIEINV_RANDOM_SEED=1\n", encoding="utf-8")
    monkeypatch.setenv("LIEINV_RANDOM_SEED", "7")
    assert load_settings(env).random_seed == 7


@pytest.mark.parametrize("key,value", [
    ("LIEINV_GRID_CAP", "0"),
    ("LIEINV_RANDOM_J", "many"),
    ("LIEINV_LOG_LEVEL", "LOUD"),
])
def test_invalid_values(tmp_path, monkeypatch, key, value):
    monkeypatch.setenv(key, value)
    with pytest.raises(ConfigError):
        load_settings(tmp_path / "missing.env")


def test_banner_formatter():
    record = logging.LogRecord("lieinv.cohomology", logging.INFO, __file__, 1, "betti %s", ((1, 3),), None)
    assert BannerFormatter().format(record) == "=== INFO[cohomology]: betti (1, 3) ==="


def test_setup_logging_installs_one_handler():
    setup_logging("DEBUG")
    setup_logging("INFO")
    root = logging.getLogger("lieinv")
    assert len(root.handlers) == 1
    assert root.level == logging.INFO
