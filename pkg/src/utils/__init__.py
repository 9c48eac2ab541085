"""
Johnson Lab - Utilities Module
Configuration loading, logging setup and run-time settings.
"""

import logging
import os
from dataclasses import dataclass
from datetime import datetime
from typing import Any, Dict, Optional

import yaml

from .errors import (
    JohnsonLabError,
    ModelMismatch,
    Unsupported,
    InsufficientData,
    ConfigurationError,
    NotALieElement,
    InvariantViolation,
    ParseError,
)

CACHE_ENV_VAR = 'JOHNSONLAB_CACHE'

DEFAULT_CONFIG: Dict[str, Any] = {
    'computation': {'weight_bound': 6, 'jobs': 1, 'seed': 20240601},
    'cache': {'enabled': True, 'cache_dir': 'cache', 'format_version': 1},
    'output': {'format': 'table', 'timestamp_format': '%Y-%m-%d %H:%M:%S'},
    'logging': {
        'level': 'WARNING',
        'console_enabled': True,
        'file_enabled': False,
        'log_file': 'logs/johnsonlab.log',
    },
}


def setup_logging(config: Dict[str, Any]) -> logging.Logger:
    """
    Configure application logging based on configuration.

    Args:
        config: Application configuration dictionary

    Returns:
        Configured logger instance
    """
    log_config = config.get('logging', {})
    level_name = str(log_config.get('level', 'WARNING')).upper()
    level = getattr(logging, level_name, logging.WARNING)

    logger = logging.getLogger('johnsonlab')
    logger.setLevel(level)
    logger.handlers.clear()

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    # Console handler goes to stderr so that stdout stays machine readable
    if log_config.get('console_enabled', True):
        console_handler = logging.StreamHandler()
        console_handler.setLevel(level)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

    if log_config.get('file_enabled', False):
        log_file = log_config.get('log_file', 'logs/johnsonlab.log')
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)

        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def load_config(config_path: str = 'config.yaml') -> Dict[str, Any]:
    """
    Load configuration from YAML file, filling in defaults for missing keys.

    Args:
        config_path: Path to configuration file

    Returns:
        Configuration dictionary

    Raises:
        FileNotFoundError: If the file does not exist
        ConfigurationError: If the file is not a YAML mapping
    """
    if not os.path.exists(config_path):
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    with open(config_path, 'r', encoding='utf-8') as f:
        try:
            loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid YAML in {config_path}: {e}") from e

    if not isinstance(loaded, dict):
        raise ConfigurationError(f"Configuration root must be a mapping: {config_path}")

    return merge_defaults(loaded)


def merge_defaults(config: Dict[str, Any]) -> Dict[str, Any]:
    """Return a copy of ``config`` with every section of DEFAULT_CONFIG present."""
    merged: Dict[str, Any] = {}
    for section, defaults in DEFAULT_CONFIG.items():
        values = dict(defaults)
        values.update(config.get(section) or {})
        merged[section] = values
    for section, values in config.items():
        merged.setdefault(section, values)
    return merged


def resolve_cache_dir(config: Dict[str, Any], override: Optional[str] = None) -> str:
    """
    Pick the cache directory: flag, then environment, then configuration.

    Args:
        config: Application configuration dictionary
        override: Value of the ``--cache-dir`` flag, if given

    Returns:
        Cache directory path
    """
    if override:
        return override
    env_value = os.environ.get(CACHE_ENV_VAR)
    if env_value:
        return env_value
    return config.get('cache', {}).get('cache_dir', 'cache')


def ensure_directories(config: Dict[str, Any], cache_dir: Optional[str] = None) -> None:
    """
    Ensure the cache and log directories exist.

    Args:
        config: Application configuration dictionary
        cache_dir: Resolved cache directory (defaults to the configured one)
    """
    directories = []
    if config.get('cache', {}).get('enabled', True):
        directories.append(cache_dir or resolve_cache_dir(config))

    log_config = config.get('logging', {})
    if log_config.get('file_enabled', False):
        log_dir = os.path.dirname(log_config.get('log_file', 'logs/johnsonlab.log'))
        if log_dir:
            directories.append(log_dir)

    for directory in directories:
        try:
            os.makedirs(directory, exist_ok=True)
        except OSError as e:
            raise ConfigurationError(f"Cannot create directory {directory}: {e}") from e


def get_timestamp(fmt: str = None) -> str:
    """
    Get current timestamp in specified format.

    Args:
        fmt: Timestamp format string (defaults to ISO format)

    Returns:
        Formatted timestamp string
    """
    if fmt is None:
        return datetime.now().isoformat()
    return datetime.now().strftime(fmt)


def _first_set(flag_value: Any, config_value: Any) -> Any:
    return config_value if flag_value is None else flag_value


@dataclass(frozen=True)
class RunConfig:
    """Validated settings for one command-line run."""
    model: str                      # "symplectic" or "boundary"
    genus: int
    punctures: int
    weight_bound: int
    output_format: str              # "json" or "table"
    cache_dir: Optional[str]        # None disables the basis cache
    jobs: int
    seed: int


def build_run_config(config: Dict[str, Any], args: Any) -> RunConfig:
    """
    Combine configuration file values with command-line flags.

    Flags win over the environment, which wins over the file.

    Args:
        config: Application configuration dictionary
        args: Parsed argparse namespace (missing attributes are ignored)

    Returns:
        RunConfig record

    Raises:
        ConfigurationError: If a value is out of range
    """
    computation = config.get('computation', {})
    output = config.get('output', {})
    cache = config.get('cache', {})

    genus = getattr(args, 'genus', None)
    punctures = getattr(args, 'punctures', None)
    if genus is not None and punctures is not None:
        raise ConfigurationError("--genus and --punctures are mutually exclusive")
    model = 'boundary' if punctures is not None else 'symplectic'

    weight_bound = _first_set(getattr(args, 'weight', None), computation.get('weight_bound', 6))
    output_format = _first_set(getattr(args, 'format', None), output.get('format', 'table'))
    jobs = _first_set(getattr(args, 'jobs', None), computation.get('jobs', 1))
    seed = _first_set(getattr(args, 'seed', None), computation.get('seed', 0))

    if int(weight_bound) < 1:
        raise ConfigurationError(f"weight bound must be >= 1, got {weight_bound}")
    if output_format not in ('json', 'table'):
        raise ConfigurationError(f"unknown output format: {output_format}")
    if int(jobs) < 1:
        raise ConfigurationError(f"jobs must be >= 1, got {jobs}")
    if genus is not None and int(genus) < 1:
        raise ConfigurationError(f"genus must be >= 1, got {genus}")
    if punctures is not None and int(punctures) < 3:
        raise ConfigurationError(f"punctures must be >= 3, got {punctures}")

    cache_dir = None
    if cache.get('enabled', True):
        cache_dir = resolve_cache_dir(config, getattr(args, 'cache_dir', None))

    return RunConfig(
        model=model,
        genus=int(genus) if genus is not None else 0,
        punctures=int(punctures) if punctures is not None else 0,
        weight_bound=int(weight_bound),
        output_format=output_format,
        cache_dir=cache_dir,
        jobs=int(jobs),
        seed=int(seed),
    )


__all__ = [
    'CACHE_ENV_VAR',
    'DEFAULT_CONFIG',
    'setup_logging',
    'load_config',
    'merge_defaults',
    'resolve_cache_dir',
    'ensure_directories',
    'get_timestamp',
    'RunConfig',
    'build_run_config',
    'JohnsonLabError',
    'ModelMismatch',
    'Unsupported',
    'InsufficientData',
    'ConfigurationError',
    'NotALieElement',
    'InvariantViolation',
    'ParseError',
]
