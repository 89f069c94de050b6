"""Graph generation and regularization commands."""

from .generate import GenerateCommand, parse_params
from .regularize import RegularizeCommand

__all__ = ['GenerateCommand', 'RegularizeCommand', 'parse_params']
