"""Structured logging helpers for pipeline and engine execution."""

from __future__ import annotations

import json
import logging
import sys
from fractions import Fraction
from typing import Any

from config.settings import settings

LOGGER_NAME = "matchwork"
_CONFIGURED = False
_MAX_LOGGED_DIGITS = 30
_LOG10_2 = 0.30102999566398120


def configure_logging(level: int | str | None = None) -> logging.Logger:
    """Configure and return the project logger once; later calls only adjust the level."""
    global _CONFIGURED
    logger = logging.getLogger(LOGGER_NAME)
    if not _CONFIGURED:
        handler = logging.StreamHandler(sys.stderr)
        formatter = logging.Formatter(
            fmt="%(asctime)s %(levelname)s %(name)s %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
        handler.setFormatter(formatter)
        logger.handlers = [handler]
        logger.propagate = False
        logger.setLevel(level or settings.LOG_LEVEL)
        _CONFIGURED = True
    elif level is not None:
        logger.setLevel(level)
    return logger


def get_logger() -> logging.Logger:
    """Return configured project logger."""
    return configure_logging()


def _compact_value(value: Any) -> Any:
    """Shrink huge exact numbers recursively so log lines stay bounded."""
    if isinstance(value, dict):
        return {key: _compact_value(nested) for key, nested in value.items()}
    if isinstance(value, (list, tuple)):
        return [_compact_value(item) for item in value]
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        if value.bit_length() * _LOG10_2 < _MAX_LOGGED_DIGITS:
            return value
        # str() of very large ints is capped by the interpreter; estimate instead.
        return f"<~{int(value.bit_length() * _LOG10_2) + 1} digits>"
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return _compact_value(value.numerator)
        return f"{_compact_value(value.numerator)}/{_compact_value(value.denominator)}"
    return value


def log_event(event: str, **fields: Any) -> None:
    """Log a structured event with huge numbers compacted."""
    logger = get_logger()
    if not logger.isEnabledFor(logging.INFO):
        return
    payload = {"event": event, **_compact_value(fields)}
    logger.info(json.dumps(payload, default=str, ensure_ascii=True))
