"""
Module utils - Utilitaires et fonctions d'aide
"""

from .decorators import log_call, validate_inputs
from .helpers import format_rational, json_pretty_print, to_jsonable

__all__ = [
    # Helpers
    "format_rational",
    "to_jsonable",
    "json_pretty_print",
    # Decorators
    "log_call",
    "validate_inputs",
]
