"""
Logging configuration for the girthkit CLI.
Log lines go to stderr so reports printed on stdout stay machine-readable.
"""

import logging
import sys
import time
from typing import Optional, TextIO

COLORS = {
    logging.DEBUG: '\033[0;36m',
    logging.WARNING: '\033[0;33m',
    logging.ERROR: '\033[0;31m',
}
RESET = '\033[0m'


class RunFormatter(logging.Formatter):
    """Seconds since setup and the logger name in front of every message.

    Warnings and errors also carry their level name.
    """

    def __init__(self, color: bool = False):
        super().__init__()
        self.color = color
        self.started = time.time()

    def format(self, record: logging.LogRecord) -> str:
        elapsed = record.created - self.started
        level = f"{record.levelname} " if record.levelno >= logging.WARNING else ''
        line = f"[+{elapsed:8.3f}s] {level}{record.name}: {record.getMessage()}"
        if record.exc_info:
            line = f"{line}\n{self.formatException(record.exc_info)}"
        if not self.color:
            return line
        color = COLORS.get(record.levelno, COLORS[logging.DEBUG] if record.levelno < logging.INFO else '')
        return f"{color}{line}{RESET}" if color else line


def setup_logging(debug: bool = False, level: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """Setup logging configuration.

    Args:
        debug: Enable debug logging; overrides level
        level: Root level name when not debugging (default INFO)
        stream: Destination (default stderr)
    """
    stream = stream or sys.stderr
    root_logger = logging.getLogger()
    if debug:
        root_logger.setLevel(logging.DEBUG)
    else:
        root_logger.setLevel(getattr(logging, (level or 'INFO').upper(), logging.INFO))

    root_logger.handlers.clear()
    handler = logging.StreamHandler(stream)
    handler.setFormatter(RunFormatter(color=stream.isatty()))
    root_logger.addHandler(handler)


def get_logger(name: str) -> logging.Logger:
    """Logger under the girthkit namespace."""
    return logging.getLogger(name if name.startswith('girthkit') else f"girthkit.{name}")
