"""Roundtrip cover commands."""

from .build import CoverCommand

__all__ = ['CoverCommand']
