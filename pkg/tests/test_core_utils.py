"""Unit tests for settings, validators, structured logging and performance tracking"""

import json
import logging
from fractions import Fraction

import pytest

from config.settings import Settings
from core.exceptions import InputError
from core.logging_utils import StructuredLogger, get_structured_logger
from core.performance import PerformanceMonitor, track_operation
from core.validators import (
    validate_and_clean_point,
    validate_and_clean_points,
    validate_dimension,
    validate_variable_names,
)


# =============================================================================
# Settings Tests
# =============================================================================

class TestSettings:
    """Tests for Settings.validate"""

    def test_defaults_are_valid(self):
        """Default settings should validate"""
        Settings().validate()

    def test_negative_tolerance(self):
        """Non-positive tolerances should be rejected"""
        settings = Settings()
        settings.RESIDUAL_TOL = 0.0
        with pytest.raises(RuntimeError):
            settings.validate()

    def test_workers(self):
        """MAX_WORKERS below 1 should be rejected and above 1 is parallel"""
        settings = Settings()
        settings.MAX_WORKERS = 0
        with pytest.raises(RuntimeError):
            settings.validate()
        settings.MAX_WORKERS = 3
        assert settings.is_parallel()


# =============================================================================
# Validator Tests
# =============================================================================

class TestValidators:
    """Tests for shared input validators"""

    def test_dimension(self):
        """Dimensions should be integers above the minimum"""
        assert validate_dimension(3, "dim") == 3
        with pytest.raises(InputError):
            validate_dimension(0, "dim")
        with pytest.raises(InputError):
            validate_dimension(True, "dim")
        with pytest.raises(InputError):
            validate_dimension(2.5, "dim")
        assert validate_dimension(6, "dim", maximum=6) == 6
        with pytest.raises(InputError):
            validate_dimension(7, "dim", maximum=6)

    def test_point(self):
        """Integral floats should be accepted and others rejected"""
        assert validate_and_clean_point([1.0, -2], 2) == (1, -2)
        with pytest.raises(InputError):
            validate_and_clean_point([1.5, 0], 2)
        with pytest.raises(InputError):
            validate_and_clean_point([1], 2)

    def test_points_drop_duplicates(self):
        """Duplicates should be dropped in first-seen order"""
        assert validate_and_clean_points([[1, 0], [0, 1], [1, 0]], 2) == [(1, 0), (0, 1)]

    def test_variable_names(self):
        """Names should be identifiers without duplicates"""
        assert validate_variable_names([" a", "b "]) == ["a", "b"]
        with pytest.raises(InputError):
            validate_variable_names(["a", "a"])
        with pytest.raises(InputError):
            validate_variable_names(["1x"])
        with pytest.raises(InputError):
            validate_variable_names([])


# =============================================================================
# Structured Logging Tests
# =============================================================================

class TestStructuredLogger:
    """Tests for StructuredLogger payload handling"""

    def test_truncates_long_lists(self):
        """Lists beyond MAX_ITEMS should be shortened"""
        logger = StructuredLogger(logging.getLogger("test"))
        sanitized = logger._sanitize_data(list(range(20)))
        assert len(sanitized) == StructuredLogger.MAX_ITEMS + 1
        assert sanitized[-1] == "[TRUNCATED:12]"

    def test_exact_and_complex_values(self):
        """Fractions should become text and complex numbers pairs"""
        logger = StructuredLogger(logging.getLogger("test"))
        assert logger._sanitize_data({"c": Fraction(1, 3), "z": 1 + 2j}) == {"c": "1/3", "z": [1.0, 2.0]}

    def test_truncates_long_strings(self):
        """Long strings should be cut at MAX_STRING"""
        logger = StructuredLogger(logging.getLogger("test"))
        assert logger._sanitize_data("x" * 250).endswith("[TRUNCATED:50]")

    def test_emits_json(self, caplog):
        """Warnings should be emitted as JSON with context"""
        logger = get_structured_logger("tests.structured")
        with caplog.at_level(logging.WARNING, logger="tests.structured"):
            logger.warning("Negative count", mu=-2)
        entry = json.loads(caplog.records[-1].getMessage())
        assert entry["level"] == "WARNING"
        assert entry["context"] == {"mu": -2}


# =============================================================================
# Performance Tests
# =============================================================================

class TestPerformanceMonitor:
    """Tests for operation timing"""

    def test_records_operations(self):
        """track_operation should count calls and failures"""
        monitor = PerformanceMonitor()
        with track_operation("volume", monitor):
            pass
        with pytest.raises(ValueError):
            with track_operation("volume", monitor):
                raise ValueError("boom")
        stats = monitor.get_performance_summary()["operation_stats"]["volume"]
        assert stats["count"] == 2
        assert stats["error_count"] == 1

    def test_slow_operation_warning(self, caplog):
        """Durations above the threshold should log a warning"""
        monitor = PerformanceMonitor(slow_threshold=0.5)
        with caplog.at_level(logging.WARNING, logger="core.performance"):
            monitor.record_operation("mixed-volume", 1.0)
        assert "Slow operation" in caplog.text

    def test_reset(self):
        """reset_stats should clear everything"""
        monitor = PerformanceMonitor()
        monitor.record_operation("bkk", 0.1)
        monitor.reset_stats()
        assert monitor.get_performance_summary()["operation_stats"] == {}
