"""Application configuration."""

import os
from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


class Settings:
    """Application settings loaded from environment variables."""

    def __init__(self):
        # Series truncation: coefficients q^0..q^N are kept
        self.precision: int = int(os.getenv("BIBRACKET_PRECISION", "60"))
        # Stabilization check recomputes ranks at N + step
        self.stability_step: int = int(os.getenv("BIBRACKET_STABILITY_STEP", "16"))

        # Matrix assembly workers (1 = evaluate rows in-process)
        self.workers: int = int(os.getenv("BIBRACKET_WORKERS", "1"))

        # Debug mode cross-checks shuffle brackets against the numeric path
        self.debug: bool = os.getenv("BIBRACKET_DEBUG", "false").lower() == "true"
        self.strict: bool = os.getenv("BIBRACKET_STRICT", "false").lower() == "true"

        # Logging
        self.log_level: str = os.getenv("BIBRACKET_LOG_LEVEL", "INFO").upper()
        log_dir = os.getenv("BIBRACKET_LOG_DIR", "./logs")
        self.log_dir: Path | None = Path(log_dir).resolve() if log_dir else None

    def stable_precision(self, precision: int) -> int:
        """Precision used to confirm a result computed at `precision`."""
        return precision + self.stability_step

    @property
    def parallel(self) -> bool:
        """Matrix rows are evaluated in a process pool when more than one worker is set."""
        return self.workers > 1


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
