"""Configuration management for chow-defect.

No environment variable is required. Values below are defaults for the CLI;
every flag overrides the matching field.
"""

import os
from dataclasses import dataclass, replace
from pathlib import Path

from dotenv import load_dotenv

METHODS = ("groebner", "linalg", "both")
FORMATS = ("text", "json")


def _load_env_cascade(local_env: str | Path | None = None) -> None:
    """Load environment variables from .env files, never overriding existing.

    Priority (highest to lowest):
    1. Existing os.environ
    2. Explicit env file, or a .env in the current directory
    3. Project-root .env
    """
    if local_env:
        load_dotenv(local_env, override=False)
    else:
        load_dotenv(override=False)

    project_root = Path(__file__).resolve().parent.parent.parent
    root_env = project_root / ".env"
    if root_env.is_file():
        load_dotenv(root_env, override=False)


@dataclass(frozen=True)
class Config:
    """Engine configuration."""

    # Verification
    max_degree: int = 24
    method: str = "both"  # groebner | linalg | both

    # Fan-out over cases
    workers: int = 1

    # Output
    output_format: str = "text"  # text | json

    # Desk-scale caps
    invariant_slice_cap: int = 6000  # monomials per degree slice
    dickson_max_h: int = 4

    @classmethod
    def from_env(cls, env_file: str | Path | None = None) -> "Config":
        """Load configuration from environment variables."""
        _load_env_cascade(env_file)

        return cls(
            max_degree=int(os.getenv("CHOWD_MAX_DEGREE", "24")),
            method=os.getenv("CHOWD_METHOD", "both").lower(),
            workers=int(os.getenv("CHOWD_WORKERS", "1")),
            output_format=os.getenv("CHOWD_FORMAT", "text").lower(),
            invariant_slice_cap=int(os.getenv("CHOWD_INVARIANT_SLICE_CAP", "6000")),
            dickson_max_h=int(os.getenv("CHOWD_DICKSON_MAX_H", "4")),
        )

    def override(self, **changes) -> "Config":
        """Return a copy with the non-None changes applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def validate(self) -> list[str]:
        """Validate configuration, return list of errors."""
        errors = []
        if self.max_degree < 1:
            errors.append("max_degree must be >= 1")
        if self.method not in METHODS:
            errors.append(f"method must be one of {', '.join(METHODS)}")
        if self.output_format not in FORMATS:
            errors.append(f"format must be one of {', '.join(FORMATS)}")
        if self.workers < 1:
            errors.append("workers must be >= 1")
        if self.invariant_slice_cap < 1:
            errors.append("invariant_slice_cap must be >= 1")
        if not 1 <= self.dickson_max_h <= 4:
            errors.append("dickson_max_h must be between 1 and 4")
        return errors


_config: Config | None = None


def get_config() -> Config:
    """The process-wide config, read from the environment on first use."""
    global _config
    if _config is None:
        _config = Config.from_env()
    return _config


def set_config(config: Config) -> None:
    """Set global config instance."""
    global _config
    _config = config


def reload_config(env_file: str | Path | None = None) -> Config:
    """Re-read the environment (and ``env_file``, if given) and install the result."""
    config = Config.from_env(env_file)
    set_config(config)
    return config
