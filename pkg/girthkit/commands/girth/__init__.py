"""Girth estimation commands."""

from .estimate import GirthCommand

__all__ = ['GirthCommand']
