"""
Logging configuration for the solver suite.
"""

import json
import logging
import sys
from datetime import datetime, timezone
from fractions import Fraction
from functools import wraps
from typing import Any, Dict, Optional, TextIO

# LogRecord attributes that are not user-supplied extra fields
_RECORD_FIELDS = frozenset((
    'name', 'msg', 'args', 'levelname', 'levelno', 'pathname', 'filename',
    'module', 'lineno', 'funcName', 'created', 'msecs', 'relativeCreated',
    'thread', 'threadName', 'processName', 'process', 'exc_info', 'exc_text',
    'stack_info', 'getMessage', 'taskName', 'message', 'asctime',
))


def _jsonable(value: Any) -> Any:
    """Render rationals as "p/q" strings and containers element-wise."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


class JSONFormatter(logging.Formatter):
    """
    JSON formatter for structured logging.
    """

    def format(self, record: logging.LogRecord) -> str:
        log_entry = {
            'timestamp': datetime.now(timezone.utc).isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
            'module': record.module,
            'function': record.funcName,
            'line': record.lineno
        }

        if record.exc_info:
            log_entry['exception'] = self.formatException(record.exc_info)

        for key, value in record.__dict__.items():
            if key not in _RECORD_FIELDS:
                log_entry[key] = _jsonable(value)

        return json.dumps(log_entry, default=str)


def setup_logging(log_level: str = "WARNING", log_format: str = "text",
                  stream: Optional[TextIO] = None) -> None:
    """
    Configure the root logger.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR)
        log_format: Format type ("json" or "text")
        stream: Destination stream, stderr by default (stdout carries command output)
    """
    level = getattr(logging, log_level.upper(), logging.WARNING)

    if log_format.lower() == "json":
        formatter = JSONFormatter()
    else:
        formatter = logging.Formatter(
            fmt='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(stream or sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    logging.getLogger(__name__).debug("Logging configured", extra={
        'log_level': log_level,
        'log_format': log_format
    })


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


class StructuredLogger:
    """
    Logger wrapper that attaches bound context fields to every record.
    """

    def __init__(self, name: str, context: Dict[str, Any] = None):
        self.logger = logging.getLogger(name)
        self.context = context or {}

    def _log(self, level: int, message: str, **kwargs) -> None:
        if not self.logger.isEnabledFor(level):
            return
        extra = {key: _jsonable(value) for key, value in {**self.context, **kwargs}.items()}
        self.logger.log(level, message, extra=extra, stacklevel=3)

    def debug(self, message: str, **kwargs) -> None:
        self._log(logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs) -> None:
        self._log(logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs) -> None:
        self._log(logging.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs) -> None:
        self._log(logging.ERROR, message, **kwargs)

    def with_context(self, **context) -> 'StructuredLogger':
        """Create new logger with additional context."""
        return StructuredLogger(self.logger.name, {**self.context, **context})


def log_function_call(func):
    """
    Decorator logging entry, exit and failure of a function at DEBUG level.
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        logger = logging.getLogger(func.__module__)
        logger.debug(f"Calling {func.__name__}", extra={'event': 'function_entry'})
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            logger.debug(f"Error in {func.__name__}: {e}", extra={
                'event': 'function_error',
                'error': str(e),
            })
            raise
        logger.debug(f"Completed {func.__name__}", extra={'event': 'function_exit'})
        return result

    return wrapper
