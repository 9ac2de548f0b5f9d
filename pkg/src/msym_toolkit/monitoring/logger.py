"""
Système de logging structuré avec structlog

Les logs partent toujours sur stderr : stdout est réservé aux rapports.
"""

import logging
import sys

import structlog

_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


def configure_logging(level: str = "WARNING") -> None:
    """
    Configure structlog pour la boîte à outils

    Args:
        level: Niveau minimal (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    """
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.dev.ConsoleRenderer()
            if sys.stderr.isatty()
            else structlog.processors.JSONRenderer(),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            _LEVELS.get(level.upper(), logging.WARNING)
        ),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


# Configuration par défaut, silencieuse sous WARNING
configure_logging()


def get_logger(name: str = "msym_toolkit") -> structlog.BoundLogger:
    """
    Récupère un logger structuré

    Args:
        name: Nom du logger

    Returns:
        Logger structlog
    """
    return structlog.get_logger(name)


def log_event(event: str, **kwargs):
    """
    Log un événement avec contexte

    Args:
        event: Nom de l'événement (snake_case)
        **kwargs: Contexte additionnel
    """
    logger = get_logger()
    logger.info(event, **kwargs)
