"""
Run settings built from command-line flags.
"""

import logging
from dataclasses import dataclass
from typing import Any

from core.cube_complex import MAX_DIMENSION
from core.errors import DomainError
from core.topology import MOBIUS_SEARCH_DEPTH

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("text", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass
class Settings:
    """
    Settings for a single command run.

    There are no environment variables or config files; every value comes
    from a flag or its default.
    """
    max_dimension: int = MAX_DIMENSION
    build_limit: int = 10
    mobius_max_length: int = MOBIUS_SEARCH_DEPTH
    seed: int = 0
    output_format: str = "text"
    log_level: str = "INFO"
    include_timing: bool = False

    @classmethod
    def from_args(cls, args: Any) -> "Settings":
        """Build settings from parsed argparse arguments (missing flags keep defaults)."""
        defaults = cls()

        def flag(name: str, default: Any) -> Any:
            value = getattr(args, name, None)
            return default if value is None else value

        return cls(
            max_dimension=defaults.max_dimension,
            build_limit=flag("build_limit", defaults.build_limit),
            mobius_max_length=flag("max_length", defaults.mobius_max_length),
            seed=flag("seed", defaults.seed),
            output_format=flag("format", defaults.output_format),
            log_level="DEBUG" if getattr(args, "debug", False) else defaults.log_level,
            include_timing=bool(getattr(args, "timing", False)),
        )

    def validate(self) -> list[str]:
        """
        Validate settings.

        Returns:
            List of validation error messages (empty if valid)
        """
        errors = []
        if self.output_format not in OUTPUT_FORMATS:
            errors.append(f"format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
        if self.log_level not in LOG_LEVELS:
            errors.append(f"log level must be one of {LOG_LEVELS}, got {self.log_level!r}")
        if not 3 <= self.build_limit <= self.max_dimension:
            errors.append(f"build limit must lie in 3..{self.max_dimension}, got {self.build_limit}")
        if self.mobius_max_length < 3:
            errors.append(f"Möbius search length must be at least 3, got {self.mobius_max_length}")
        if self.seed < 0:
            errors.append(f"seed must be nonnegative, got {self.seed}")
        return errors

    def validate_or_raise(self) -> None:
        """
        Raises:
            DomainError: Listing every invalid setting
        """
        errors = self.validate()
        if errors:
            raise DomainError("Invalid settings:\n" + "\n".join(f"  - {e}" for e in errors))
