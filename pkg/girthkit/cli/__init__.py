"""
CLI module for girthkit.
Provides the command-line interface and its shared infrastructure.
"""

from .base import BaseCommand
from .config import Config
from .logging import get_logger, setup_logging
from .main import cli

__all__ = ['BaseCommand', 'Config', 'setup_logging', 'get_logger', 'cli']
