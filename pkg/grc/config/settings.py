"""
Toolkit configuration management
"""
import os
from typing import Optional
from dotenv import load_dotenv

from grc import __version__

load_dotenv()


class Settings:
    """Toolkit settings read from the environment"""

    def __init__(self):
        # Application Metadata
        self.app_name: str = "grc"
        self.app_version: str = __version__
        self.app_description: str = (
            "RePair grammar compression from plain text or directly from a straight-line program"
        )

        # Logging
        self.log_level: str = os.getenv("GRC_LOG_LEVEL", "INFO").upper()

        # Engine verification
        self.debug_verify: bool = (
            os.getenv("GRC_DEBUG_VERIFY", "false").lower() == "true"
        )
        self.locality_constant: int = int(os.getenv("GRC_LOCALITY_CONSTANT", "16"))

        # Hybrid switch-over
        self.default_hybrid_t: int = int(os.getenv("GRC_HYBRID_T", "3"))

        # Input alphabet
        self.alphabet_size: int = int(os.getenv("GRC_ALPHABET_SIZE", "256"))

        # Corpus generation
        self.default_seed: int = int(os.getenv("GRC_DEFAULT_SEED", "0"))


# Singleton instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Get settings singleton instance

    Returns:
        Settings: Toolkit settings instance
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next call re-reads the environment"""
    global _settings
    _settings = None
