"""Runtime settings read from a config dict or the environment."""

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .errors import InvalidInput

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

_TRUTHY = {"1", "true", "yes", "on"}


@dataclass
class Settings:
    cache_dir: Optional[Path] = None  # where kl_<n>.json tables live
    verbose: bool = False
    log_level: str = "WARNING"  # DEBUG, INFO, WARNING, ERROR

    def __post_init__(self):
        self.log_level = str(self.log_level).upper()
        if self.log_level not in LOG_LEVELS:
            raise InvalidInput(
                f"log_level must be one of {', '.join(LOG_LEVELS)}, got {self.log_level!r}"
            )
        if self.cache_dir is not None and not isinstance(self.cache_dir, Path):
            self.cache_dir = Path(self.cache_dir)

    @classmethod
    def from_dict(cls, config: dict) -> "Settings":
        """
        Build settings from a config dict, falling back to the environment
        for anything not provided:

            Settings.from_dict({"cache_dir": "~/.cache/heckekit", "verbose": True})
        """
        env = cls.from_env()
        cache_dir = config.get("cache_dir") or config.get("cacheDir") or env.cache_dir
        if cache_dir is not None:
            cache_dir = Path(cache_dir).expanduser()
        verbose = config.get("verbose", env.verbose)
        log_level = config.get("log_level") or config.get("logLevel")
        if log_level is None:
            log_level = "INFO" if verbose and env.log_level == "WARNING" else env.log_level
        return cls(cache_dir=cache_dir, verbose=bool(verbose), log_level=log_level)

    @classmethod
    def from_env(cls) -> "Settings":
        cache_dir = os.environ.get("HECKEKIT_CACHE")
        return cls(
            cache_dir=Path(cache_dir).expanduser() if cache_dir else None,
            verbose=os.environ.get("HECKEKIT_VERBOSE", "").strip().lower() in _TRUTHY,
            log_level=os.environ.get("HECKEKIT_LOG_LEVEL", "WARNING"),
        )

    @property
    def logging_level(self) -> int:
        return getattr(logging, self.log_level)
