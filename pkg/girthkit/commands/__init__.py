"""
Command implementations for the girthkit CLI.
Each subpackage provides one command group.
"""

from .bench import BenchCommand
from .cover import CoverCommand
from .girth import GirthCommand
from .graphs import GenerateCommand, RegularizeCommand
from .spanner import SpannerCommand
from .verify import VerifyCoverCommand, VerifySpannerCommand

__all__ = [
    'BenchCommand',
    'CoverCommand',
    'GenerateCommand',
    'GirthCommand',
    'RegularizeCommand',
    'SpannerCommand',
    'VerifyCoverCommand',
    'VerifySpannerCommand',
]
