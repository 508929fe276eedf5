"""
Common helper functions for the partition playground.
"""

import logging
import sys
from typing import Optional

from .errors import InvalidParameter

# Set up logging
logger = logging.getLogger(__name__)


def setup_logging(log_level: str = 'WARNING', log_file: Optional[str] = None) -> None:
    """
    Configure application logging.

    Log records go to stderr so that stdout carries only command payloads.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR)
        log_file: Optional path of an additional log file
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))

    logging.basicConfig(
        level=getattr(logging, log_level.upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True
    )


def format_error_response(error: Exception) -> str:
    """
    Format an error for display on the command line.

    Args:
        error: The exception that occurred

    Returns:
        One-line user-friendly error message
    """
    logger.error(f"Error occurred: {error}")

    name = type(error).__name__
    message = str(error) or name
    return f"error ({name}): {message}"


def require_positive(name: str, value: int) -> int:
    """Validate a modulus or exponent that must be at least 1."""
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InvalidParameter(f"{name} must be a positive integer, got {value!r}")
    return value


def require_non_negative(name: str, value: int) -> int:
    """Validate a weight, cap or truncation that must be at least 0."""
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidParameter(f"{name} must be a non-negative integer, got {value!r}")
    return value
