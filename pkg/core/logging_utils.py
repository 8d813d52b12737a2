"""Structured logging utilities with payload truncation for large geometric data"""

import logging
import json
from fractions import Fraction
from typing import Any, Dict
from datetime import datetime, timezone


class StructuredLogger:
    """Structured logger that keeps point lists and coefficient maps readable"""

    MAX_ITEMS = 8
    MAX_STRING = 200

    def __init__(self, logger: logging.Logger):
        self.logger = logger

    def _sanitize_data(self, data: Any) -> Any:
        """Recursively shorten oversized payloads and make exact numbers JSON-safe"""
        if isinstance(data, dict):
            items = list(data.items())
            sanitized = {str(key): self._sanitize_data(value) for key, value in items[:self.MAX_ITEMS]}
            if len(items) > self.MAX_ITEMS:
                sanitized["[TRUNCATED]"] = len(items) - self.MAX_ITEMS
            return sanitized
        elif isinstance(data, (list, tuple, set, frozenset)):
            items = list(data)
            sanitized = [self._sanitize_data(item) for item in items[:self.MAX_ITEMS]]
            if len(items) > self.MAX_ITEMS:
                sanitized.append(f"[TRUNCATED:{len(items) - self.MAX_ITEMS}]")
            return sanitized
        elif isinstance(data, Fraction):
            return str(data)
        elif isinstance(data, complex):
            return [data.real, data.imag]
        elif isinstance(data, str) and len(data) > self.MAX_STRING:
            return data[:self.MAX_STRING] + f"...[TRUNCATED:{len(data) - self.MAX_STRING}]"
        else:
            return data

    def _create_log_entry(self, level: str, message: str, **kwargs) -> Dict[str, Any]:
        """Create structured log entry"""
        entry = {
            'timestamp': datetime.now(timezone.utc).isoformat(),
            'level': level,
            'message': message,
        }

        if kwargs:
            entry['context'] = self._sanitize_data(kwargs)

        return entry

    def _emit(self, level: int, message: str, **kwargs):
        if self.logger.isEnabledFor(level):
            entry = self._create_log_entry(logging.getLevelName(level), message, **kwargs)
            self.logger.log(level, json.dumps(entry, default=str))

    def debug(self, message: str, **kwargs):
        self._emit(logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs):
        self._emit(logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs):
        self._emit(logging.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs):
        self._emit(logging.ERROR, message, **kwargs)


def get_structured_logger(name: str) -> StructuredLogger:
    """Get a structured logger instance"""
    return StructuredLogger(logging.getLogger(name))
