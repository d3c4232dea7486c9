import pytest

from quasif.cli import main
from quasif.config import get_settings, reset_settings
from quasif.errors import ConfigError


def test_defaults():
    settings = get_settings()
    assert settings.log_level == "WARNING"
    assert settings.workers == 1
    assert settings.enum_cap == 10_000
    assert settings.search_limit == 24
    assert settings.monomial_limit == 10**7
    assert settings.progress is False


def test_settings_are_cached(monkeypatch):
    first = get_settings()
    monkeypatch.setenv("QUASIF_WORKERS", "4")
    assert get_settings() is first
    reset_settings()
    assert get_settings().workers == 4


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("QUASIF_LOG_LEVEL", "debug")
    monkeypatch.setenv("QUASIF_ENUM_CAP", "50")
    monkeypatch.setenv("QUASIF_SEARCH_LIMIT", "30")
    settings = get_settings()
    assert settings.log_level == "DEBUG"
    assert settings.enum_cap == 50
    assert settings.search_limit == 30


@pytest.mark.parametrize("value,expected", [("1", True), ("true", True), ("YES", True), ("on", True),
                                            ("0", False), ("no", False), ("", False)])
def test_progress_flag(monkeypatch, value, expected):
    monkeypatch.setenv("QUASIF_PROGRESS", value)
    assert get_settings().progress is expected


@pytest.mark.parametrize("var,value", [
    ("QUASIF_WORKERS", "many"),
    ("QUASIF_WORKERS", "0"),
    ("QUASIF_ENUM_CAP", "-1"),
    ("QUASIF_MONOMIAL_LIMIT", "1e6"),
])
def test_bad_values(monkeypatch, var, value):
    monkeypatch.setenv(var, value)
    with pytest.raises(ConfigError):
        get_settings()


def test_bad_config_is_a_domain_error(monkeypatch, capsys):
    monkeypatch.setenv("QUASIF_WORKERS", "zero")
    assert main(["bounds", "--n", "4"]) == 1
    assert capsys.readouterr().err.startswith("ConfigError:")
