# app/core/logger.py
import logging
import sys
from typing import Dict

from app.core.config import settings

_LOGGERS: Dict[str, logging.Logger] = {}
_FORMAT = "[%(asctime)s] [%(levelname)s] [%(name)s]: %(message)s"


def get_logger(name: str) -> logging.Logger:
    """Service logger writing to stderr, so stdout carries only command output."""
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT))
        logger.addHandler(handler)
        logger.setLevel(settings.LOG_LEVEL.upper())
        logger.propagate = False
        _LOGGERS[name] = logger
    return logger


def set_log_level(level: str) -> None:
    """Re-level every service logger created so far and the ones still to come."""
    level = level.upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ValueError(f"unknown log level {level!r}")
    settings.LOG_LEVEL = level
    for logger in _LOGGERS.values():
        logger.setLevel(level)
