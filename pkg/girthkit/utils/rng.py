"""Seeded, splittable random streams.

Every random choice in the library draws from a stream derived from
(seed, tag path, indices), so results never depend on call order or on how
work is scheduled across threads.
"""

import zlib
from typing import Tuple, Union

import numpy as np

Key = Union[int, str]


def _encode(part: Key) -> int:
    if isinstance(part, str):
        return zlib.crc32(part.encode('utf-8'))
    if part < 0:
        raise ValueError(f"stream index must be non-negative, got {part}")
    return int(part)


class RngStreams:
    """A node in the stream tree.

    Example:
        streams = RngStreams(7).child('similar_set', 'out', 12)
        rng = streams.generator('round', 3)
    """

    def __init__(self, seed: int, path: Tuple[int, ...] = ()):
        if seed < 0:
            raise ValueError(f"seed must be non-negative, got {seed}")
        self.seed = int(seed)
        self.path = path

    def child(self, *parts: Key) -> 'RngStreams':
        """Derive a sub-tree; children with different parts are independent."""
        return RngStreams(self.seed, self.path + tuple(_encode(p) for p in parts))

    def generator(self, *parts: Key) -> np.random.Generator:
        """Numpy generator for the leaf named by parts."""
        key = self.path + tuple(_encode(p) for p in parts)
        return np.random.default_rng(np.random.SeedSequence(entropy=self.seed, spawn_key=key))

    def __repr__(self) -> str:
        return f"RngStreams(seed={self.seed}, path={self.path})"
