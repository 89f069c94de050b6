"""Roundtrip spanner commands."""

from .build import SpannerCommand

__all__ = ['SpannerCommand']
