"""
Module de monitoring
Logging structuré sur stderr
"""

from msym_toolkit.monitoring.logger import configure_logging, get_logger, log_event

__all__ = [
    "configure_logging",
    "get_logger",
    "log_event",
]
