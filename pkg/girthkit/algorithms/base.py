"""Base pipeline with run statistics and debug timing."""

import logging
import time
from abc import ABC, abstractmethod
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, Generic, Iterator, List, Optional, Tuple, TypeVar

from ..graph.core import INF, CycleWitness, Graph
from .error_tracker import ErrorTracker


class RunStats:
    """Statistics for one pipeline run."""

    def __init__(self):
        """Initialize stats with default values."""
        self._stats = {
            'searches': 0,
            'retries': 0,
            'started_at': datetime.now(timezone.utc),
            'completed_at': None,
        }

    def __getitem__(self, key: str) -> Any:
        return self._stats[key]

    def __setitem__(self, key: str, value: Any) -> None:
        self._stats[key] = value

    def __getattr__(self, name: str) -> Any:
        """Get stat value by attribute name, creating counters on first use."""
        if name.startswith('__') or name == '_stats':
            raise AttributeError(name)
        try:
            return self._stats[name]
        except KeyError:
            self._stats[name] = 0
            return 0

    def __setattr__(self, name: str, value: Any) -> None:
        if name == '_stats':
            super().__setattr__(name, value)
        else:
            self._stats[name] = value

    def to_dict(self) -> Dict[str, Any]:
        """Convert stats to dictionary format."""
        result = {}
        for key, value in self._stats.items():
            if isinstance(value, datetime):
                result[key] = value.isoformat()
            elif isinstance(value, float):
                result[key] = round(value, 3)
            else:
                result[key] = value
        return result


@dataclass
class GirthResult:
    """Girth estimate plus the cycle that certifies it.

    ``estimate`` is INF for acyclic graphs. ``schedule`` lists (radius, found)
    for every radius the search evaluated.
    """

    estimate: int
    witness: Optional[CycleWitness]
    schedule: List[Tuple[int, bool]] = field(default_factory=list)
    scale: Optional[int] = None
    ball: Optional[Any] = None
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def is_acyclic(self) -> bool:
        return self.estimate >= INF


T = TypeVar('T')


class BasePipeline(ABC, Generic[T]):
    """Abstract base class for the algorithm pipelines."""

    def __init__(self, debug: bool = False, error_tracker: Optional[ErrorTracker] = None):
        self.debug = debug
        self.logger = logging.getLogger(self.__class__.__name__)
        self.stats = RunStats()
        self.error_tracker = error_tracker or ErrorTracker()

        if self.debug:
            self.logger.debug(f"Initialized {self.__class__.__name__}")

    @contextmanager
    def timed(self, label: str) -> Iterator[None]:
        """Accumulate wall time of the block into stats['<label>_time']."""
        start = time.perf_counter()
        try:
            yield
        finally:
            elapsed = time.perf_counter() - start
            key = f"{label}_time"
            self.stats[key] = getattr(self.stats, key) + elapsed
            if self.debug:
                self.logger.debug(f"{label} completed in {elapsed:.3f}s")

    @abstractmethod
    def run(self, g: Graph) -> T:
        """Run the pipeline on g."""

    def finish(self) -> None:
        self.stats.completed_at = datetime.now(timezone.utc)
        self.error_tracker.log_summary(self.logger)

    def get_stats(self) -> Dict[str, Any]:
        return self.stats.to_dict()
