"""
Configuration management for the partition playground.

Configuration sources in priority order (later sources win):
1. Dataclass defaults
2. Local settings file (settings.local.json if present, otherwise settings.json)
3. Environment variables (a .env file is honoured when python-dotenv is installed)
"""

import os
import json
import logging
from typing import Dict, Any, Optional, Tuple
from dataclasses import dataclass, asdict
from pathlib import Path

# Setup logging
logger = logging.getLogger(__name__)

PACKAGE_DIR = Path(__file__).resolve().parent

# Environment variable -> UnifiedConfig field
ENVIRONMENT_KEYS = {
    'PARTITION_ORACLE_CAP': 'oracle_cap',
    'PARTITION_ENUMERATION_CAP': 'enumeration_cap',
    'PARTITION_DEFAULT_LIMIT': 'default_limit',
    'PARTITION_RANDOM_CASES': 'random_cases',
    'PARTITION_RANDOM_SEED': 'random_seed',
    'PARTITION_WORKERS': 'workers',
    'PARTITION_LOG_LEVEL': 'log_level',
    'PARTITION_LOG_FILE': 'log_file',
    'PARTITION_REPORT_FOLDER': 'report_folder',
}

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


@dataclass
class UnifiedConfig:
    """Unified configuration for enumeration, verification and output settings."""

    # Brute-force oracle
    oracle_cap: int = 30          # largest n cross-checked by enumeration
    enumeration_cap: int = 60     # largest n enumerate_partitions accepts

    # Series truncation used when --limit is omitted
    default_limit: int = 60

    # Randomized checks
    random_cases: int = 10000
    random_seed: int = 1729

    # Selftest fan-out (1 = sequential)
    workers: int = 1

    # Application settings
    log_level: str = "WARNING"
    log_file: str = ""
    report_folder: str = "reports"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return asdict(self)

    def update_from_dict(self, data: Dict[str, Any]) -> None:
        """Update configuration from dictionary."""
        for key, value in data.items():
            if hasattr(self, key):
                # Handle type conversion
                field_type = type(getattr(self, key))
                if field_type == int:
                    try:
                        setattr(self, key, int(value) if value not in (None, "") else getattr(self, key))
                    except (ValueError, TypeError):
                        logger.warning(f"Ignoring non-integer value for {key}: {value!r}")
                else:
                    setattr(self, key, str(value) if value is not None else "")
            else:
                logger.debug(f"Ignoring unknown configuration key: {key}")

    def validate(self) -> Tuple[bool, str]:
        """Check value ranges; returns (ok, message)."""
        if self.oracle_cap < 0:
            return False, 'oracle_cap must be non-negative.'
        if self.enumeration_cap < 0:
            return False, 'enumeration_cap must be non-negative.'
        if self.oracle_cap > self.enumeration_cap:
            return False, 'oracle_cap cannot exceed enumeration_cap.'
        if self.default_limit < 0:
            return False, 'default_limit must be non-negative.'
        if self.random_cases < 0:
            return False, 'random_cases must be non-negative.'
        if self.workers < 1:
            return False, 'workers must be at least 1.'
        if self.log_level.upper() not in LOG_LEVELS:
            return False, f'log_level must be one of {", ".join(LOG_LEVELS)}.'
        return True, ''


class ConfigManager:
    """Manages configuration loaded from settings files and the environment."""

    def __init__(self, config_file: Optional[str] = None):
        if config_file is None:
            config_file = self._detect_config_file()

        self.config_file = Path(config_file)
        self.config = UnifiedConfig()

        logger.info(f"Using config file: {self.config_file}")
        self._load_config()

    def _detect_config_file(self) -> str:
        """
        Detect which settings file to use.

        settings.local.json takes priority when it exists; it is meant for
        machine-specific overrides and is not shipped.
        """
        local_file = PACKAGE_DIR / 'settings.local.json'
        if local_file.exists():
            logger.info("Found settings.local.json - using for local overrides")
            return str(local_file)
        return str(PACKAGE_DIR / 'settings.json')

    def _load_config(self) -> None:
        """Load settings file first, then environment overrides, then validate."""
        self._load_from_file()
        self._load_from_environment()

        ok, message = self.config.validate()
        if not ok:
            logger.warning(f"Invalid configuration ({message}) - falling back to defaults")
            self.config = UnifiedConfig()

        logger.info(f"Configuration loaded - oracle cap {self.config.oracle_cap}, "
                    f"enumeration cap {self.config.enumeration_cap}")

    def _load_from_file(self) -> None:
        if not self.config_file.exists():
            logger.info(f"{self.config_file.name} not found - using defaults")
            return
        try:
            with open(self.config_file, 'r', encoding='utf-8') as f:
                data = json.load(f)
            if not isinstance(data, dict):
                logger.warning(f"Ignoring {self.config_file.name}: top level is not an object")
                return
            self.config.update_from_dict(data)
            logger.info(f"Loaded configuration from {self.config_file.name}")
        except (json.JSONDecodeError, PermissionError, OSError) as e:
            logger.warning(f"Could not load {self.config_file.name}: {e}")

    def _load_from_environment(self) -> None:
        """Load overrides from PARTITION_* environment variables."""
        try:
            from dotenv import load_dotenv
            load_dotenv()
        except ImportError:
            pass  # dotenv not available, plain environment only

        overrides = {}
        for env_name, field_name in ENVIRONMENT_KEYS.items():
            value = os.getenv(env_name)
            if value is not None and value != "":
                overrides[field_name] = value
                logger.info(f"Loaded {field_name} from environment ({env_name})")

        if overrides:
            self.config.update_from_dict(overrides)

    def get_config(self) -> UnifiedConfig:
        """Get current configuration."""
        return self.config

    def update_config(self, **kwargs) -> bool:
        """Apply in-memory overrides; rejected updates leave the config untouched."""
        candidate = UnifiedConfig(**self.config.to_dict())
        candidate.update_from_dict(kwargs)

        ok, message = candidate.validate()
        if not ok:
            logger.warning(f"Configuration update rejected: {message}")
            return False

        self.config = candidate
        return True

    def reset_to_defaults(self) -> None:
        """Reset to defaults and reload from the settings file and environment."""
        self.config = UnifiedConfig()
        self._load_config()


# Global configuration manager
config_manager = ConfigManager()


def get_config() -> UnifiedConfig:
    """Get current unified configuration."""
    return config_manager.get_config()


def update_config(**kwargs) -> bool:
    """Update configuration parameters for this process."""
    return config_manager.update_config(**kwargs)


def use_config_file(config_file: str) -> UnifiedConfig:
    """Replace the global manager with one reading the given settings file."""
    global config_manager
    config_manager = ConfigManager(config_file)
    return config_manager.get_config()
