"""
Tests for settings, error reporting and logging setup
"""
import logging

import pytest
from pydantic import ValidationError

from pascal_arrays.core.config import Settings
from pascal_arrays.core.exceptions import (
    ClusterError,
    InvalidSpecError,
    PascalArrayError,
    report_error,
)
from pascal_arrays.core.logging_config import configure_logging


def test_defaults_from_test_env(test_settings):
    """Test the values loaded for the test run"""
    assert test_settings.log_level == "WARNING"
    assert test_settings.contour_mode == "blob"
    assert test_settings.enumeration_cap == 10
    assert test_settings.family_cap == 8


def test_value_normalization():
    """Test that names are normalized and checked"""
    assert Settings(contour_mode="CYCLOTOMIC").contour_mode == "cyclotomic"
    assert Settings(log_level="debug").log_level == "DEBUG"

    # Verify unknown values
    with pytest.raises(ValidationError):
        Settings(contour_mode="spiral")
    with pytest.raises(ValidationError):
        Settings(log_level="chatty")


def test_environment_prefix(monkeypatch):
    """Test reading settings from prefixed environment variables"""
    monkeypatch.setenv("PASCAL_CLUSTER_MAX_RANK", "3")
    monkeypatch.setenv("PASCAL_CONTOUR_MODE", "Cyclotomic")

    fresh = Settings()
    assert fresh.cluster_max_rank == 3
    assert fresh.contour_mode == "cyclotomic"


def test_error_codes():
    """Test default details and codes"""
    exc = ClusterError()

    assert isinstance(exc, PascalArrayError)
    assert exc.error_code == "CLUSTER"
    assert exc.detail == "Invalid cluster operation"
    assert str(exc) == "Invalid cluster operation"
    assert PascalArrayError("x").error_code == "PASCAL_ERROR"


def test_report_error(caplog):
    """Test the serialized form of an error"""
    with caplog.at_level(logging.ERROR):
        content = report_error(InvalidSpecError("bad", errors=[{"x": 1}]), context="cli")

    # Verify the payload and the log line
    assert content == {"error_code": "INVALID_SPEC", "detail": "bad", "errors": [{"x": 1}]}
    assert "INVALID_SPEC - bad" in caplog.text
    assert report_error(InvalidSpecError("bad")) == {
        "error_code": "INVALID_SPEC",
        "detail": "bad",
    }


def test_configure_logging():
    """Test that the root logger takes the requested level"""
    configure_logging("debug")
    assert logging.getLogger().level == logging.DEBUG

    configure_logging("warning")
    assert logging.getLogger().level == logging.WARNING
