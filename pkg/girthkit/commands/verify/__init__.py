"""Verification commands for covers and spanners."""

from .check import VerifyCoverCommand, VerifySpannerCommand, load_spanner_edges

__all__ = ['VerifyCoverCommand', 'VerifySpannerCommand', 'load_spanner_edges']
