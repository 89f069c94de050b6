"""
Configuration management for the girthkit CLI.
Loads run defaults from environment variables and an optional .env file.
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


@dataclass
class Config:
    """Configuration settings for the girthkit CLI."""

    # Concurrency
    threads: int = 1

    # Logging
    log_level: str = 'INFO'

    # Verification / bench baseline guard
    apsp_limit: int = 512

    # Randomness
    seed: int = 0
    retries: int = 3

    # Output
    output_dir: Optional[Path] = None

    @classmethod
    def from_env(cls, env_file: Optional[Path] = None) -> 'Config':
        """Create configuration from environment variables.

        Args:
            env_file: Optional path to .env file

        Returns:
            Config: Configuration instance

        Raises:
            ValueError: If a variable is not a valid number or fails validate()
        """
        if env_file:
            load_dotenv(env_file)
        else:
            load_dotenv()

        try:
            config = cls(
                threads=int(os.getenv('GIRTHKIT_THREADS', '1')),
                log_level=os.getenv('GIRTHKIT_LOG_LEVEL', 'INFO').upper(),
                apsp_limit=int(os.getenv('GIRTHKIT_APSP_LIMIT', '512')),
                seed=int(os.getenv('GIRTHKIT_SEED', '0')),
                retries=int(os.getenv('GIRTHKIT_RETRIES', '3')),
                output_dir=Path(os.getenv('GIRTHKIT_OUTPUT_DIR')) if os.getenv('GIRTHKIT_OUTPUT_DIR') else None,
            )
        except ValueError as e:
            raise ValueError(f"Invalid GIRTHKIT_* setting: {e}") from e
        config.validate()
        return config

    def validate(self) -> bool:
        """Validate configuration settings.

        Returns:
            bool: True if configuration is valid
        """
        if self.threads <= 0:
            raise ValueError("threads must be positive")
        if self.apsp_limit <= 0:
            raise ValueError("apsp_limit must be positive")
        if self.retries < 0:
            raise ValueError("retries must not be negative")
        if self.seed < 0:
            raise ValueError("seed must not be negative")
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of: {', '.join(LOG_LEVELS)}")

        if self.output_dir and not self.output_dir.exists():
            try:
                self.output_dir.mkdir(parents=True, exist_ok=True)
            except Exception as e:
                raise ValueError(f"Failed to create output directory: {e}")

        return True

    def output_path(self, path: Optional[Path]) -> Optional[Path]:
        """Relative report paths land in output_dir when one is configured."""
        if path is None or self.output_dir is None or path.is_absolute():
            return path
        return self.output_dir / path

    def to_dict(self) -> Dict[str, Any]:
        return {
            'threads': self.threads,
            'apsp_limit': self.apsp_limit,
            'seed': self.seed,
            'retries': self.retries,
        }
