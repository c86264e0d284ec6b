"""
Configuration management for the rank-1 equilibrium suite.
"""

import logging
import os
from dataclasses import dataclass, field, is_dataclass
from typing import Optional

import yaml

logger = logging.getLogger(__name__)


@dataclass
class LpConfig:
    """Configuration for the exact simplex engine."""
    verify_certificates: bool = True
    max_pivots: int = 100000


@dataclass
class SearchConfig:
    """Configuration for the binary search solver."""
    max_iterations: int = 256
    check_invariants: bool = False


@dataclass
class EnumerationConfig:
    """Configuration for maximal Nash subset enumeration."""
    max_tight_subsets: int = 2000000


@dataclass
class OracleConfig:
    """Configuration for the brute-force verification oracle."""
    size_limit: int = 5
    max_tight_subsets: int = 2000000


@dataclass
class Config:
    """Main configuration for the suite."""
    version: str = "1.0.0"

    # Component configurations
    lp: LpConfig = field(default_factory=LpConfig)
    search: SearchConfig = field(default_factory=SearchConfig)
    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)

    # Logging
    log_level: str = "WARNING"
    log_format: str = "text"


def load_config(config_path: Optional[str] = None) -> Config:
    """Load configuration from a YAML file; missing keys keep their defaults."""
    config = Config()

    if config_path:
        if not os.path.exists(config_path):
            raise FileNotFoundError(f"config file not found: {config_path}")
        with open(config_path, 'r') as f:
            config_data = yaml.safe_load(f)
        if config_data is None:
            return config
        if not isinstance(config_data, dict):
            raise ValueError(f"config file {config_path} must hold a mapping, got {type(config_data).__name__}")
        _update_config_from_dict(config, config_data)

    return config


def _check_type(name: str, current, value) -> None:
    expected = type(current)
    # bool is an int subclass; keep the two apart
    if isinstance(value, bool) != (expected is bool) or not isinstance(value, expected):
        raise ValueError(f"config key {name} must be {expected.__name__}, got {value!r}")


def _update_config_from_dict(config: Config, data: dict) -> None:
    """Update config object from dictionary data."""
    for key, value in data.items():
        if not hasattr(config, key):
            logger.warning(f"Ignoring unknown config key: {key}")
            continue
        current = getattr(config, key)
        if is_dataclass(current):
            if not isinstance(value, dict):
                raise ValueError(f"config section {key} must be a mapping, got {value!r}")
            for sub_key, sub_value in value.items():
                if hasattr(current, sub_key):
                    _check_type(f"{key}.{sub_key}", getattr(current, sub_key), sub_value)
                    setattr(current, sub_key, sub_value)
                else:
                    logger.warning(f"Ignoring unknown config key: {key}.{sub_key}")
        else:
            _check_type(key, current, value)
            setattr(config, key, value)
