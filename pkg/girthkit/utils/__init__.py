"""Utility functions and helpers."""

from .numeric import (
    at_most,
    dyadic_schedule,
    geometric_schedule,
    klogk_rounds,
    log2_ceil,
    log_factor,
    loglog,
)
from .rng import RngStreams

__all__ = [
    'RngStreams',
    'at_most',
    'dyadic_schedule',
    'geometric_schedule',
    'klogk_rounds',
    'log2_ceil',
    'log_factor',
    'loglog',
]
