import logging
from pathlib import Path

import pytest

from heckekit.config import Settings
from heckekit.errors import InvalidInput


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("HECKEKIT_CACHE", "HECKEKIT_VERBOSE", "HECKEKIT_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    settings = Settings()
    assert settings.cache_dir is None
    assert not settings.verbose
    assert settings.logging_level == logging.WARNING


def test_from_env(monkeypatch, tmp_path):
    monkeypatch.setenv("HECKEKIT_CACHE", str(tmp_path))
    monkeypatch.setenv("HECKEKIT_VERBOSE", "yes")
    monkeypatch.setenv("HECKEKIT_LOG_LEVEL", "debug")
    settings = Settings.from_env()
    assert settings.cache_dir == tmp_path
    assert settings.verbose
    assert settings.log_level == "DEBUG"


def test_from_dict_overrides_env(monkeypatch, tmp_path):
    monkeypatch.setenv("HECKEKIT_LOG_LEVEL", "ERROR")
    settings = Settings.from_dict({"cacheDir": str(tmp_path), "logLevel": "info"})
    assert settings.cache_dir == Path(tmp_path)
    assert settings.logging_level == logging.INFO
    assert Settings.from_dict({}).log_level == "ERROR"


def test_verbose_raises_default_level():
    assert Settings.from_dict({"verbose": True}).log_level == "INFO"
    assert Settings.from_dict({"verbose": True, "log_level": "DEBUG"}).log_level == "DEBUG"


def test_cache_dir_is_a_path():
    assert Settings(cache_dir="/tmp/kl").cache_dir == Path("/tmp/kl")


def test_bad_log_level():
    with pytest.raises(InvalidInput, match="log_level"):
        Settings(log_level="LOUD")
    with pytest.raises(ValueError):
        Settings.from_dict({"log_level": "chatty"})
