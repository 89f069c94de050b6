"""Error and anomaly tracking for pipelines and commands."""

import logging
from collections import defaultdict
from typing import Dict, Optional, Set


class ErrorTracker:
    """Track and aggregate errors and soft anomalies (retries, bound overruns)."""

    def __init__(self, max_samples: int = 3):
        """Initialize error tracker.

        Args:
            max_samples: Maximum number of samples to store per error type
        """
        self.error_counts: Dict[str, int] = defaultdict(int)
        self.error_samples: Dict[str, list] = defaultdict(list)
        self.max_samples = max_samples
        self.seen_errors: Set[str] = set()

    def add_error(self, error_type: str, message: str, context: Optional[Dict] = None) -> None:
        """Record one occurrence; identical (type, message) pairs count once.

        Args:
            error_type: Category of the event, e.g. 'WHP_RETRY'
            message: Human readable description
            context: Optional key/value details
        """
        error_key = f"{error_type}:{message}"
        if error_key in self.seen_errors:
            return
        self.seen_errors.add(error_key)
        self.error_counts[error_type] += 1
        if len(self.error_samples[error_type]) < self.max_samples:
            self.error_samples[error_type].append({
                'message': message,
                'context': context or {},
            })

    def count(self, error_type: str) -> int:
        return self.error_counts.get(error_type, 0)

    def __bool__(self) -> bool:
        return bool(self.error_counts)

    def get_summary(self) -> Dict:
        """Counts and samples per type."""
        return {
            'counts': dict(self.error_counts),
            'samples': dict(self.error_samples),
        }

    def log_summary(self, logger: logging.Logger) -> None:
        if not self.error_counts:
            return

        logger.warning("Anomaly summary:")
        for error_type, count in self.error_counts.items():
            logger.warning(f"  {error_type} ({count} occurrences)")
            for i, sample in enumerate(self.error_samples[error_type], 1):
                logger.warning(f"    sample {i}: {sample['message']}")
                for key, value in sample['context'].items():
                    logger.warning(f"      {key}: {value}")
