"""
Décorateurs utilitaires pour les points d'entrée des analyses
"""

import inspect
import time
from collections.abc import Callable
from functools import wraps

from msym_toolkit.core.exceptions import InputError
from msym_toolkit.monitoring.logger import get_logger


def log_call(event: str):
    """
    Décorateur pour logger les appels d'une analyse

    Args:
        event: Nom snake_case émis à la fin de l'appel
    """

    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs):
            logger = get_logger(func.__module__)
            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                logger.debug(f"{event}_failed", error=str(e), error_type=type(e).__name__)
                raise
            logger.info(event, seconds=round(time.perf_counter() - start_time, 4))
            return result

        return wrapper

    return decorator


def validate_inputs(**validators):
    """
    Décorateur pour valider les arguments d'entrée

    Args:
        **validators: Dict des validateurs par nom d'argument. Un validateur
            `Validator` lève sa propre erreur ; un simple callable retournant
            False provoque une InputError.
    """

    def decorator(func: Callable) -> Callable:
        sig = inspect.signature(func)

        @wraps(func)
        def wrapper(*args, **kwargs):
            bound = sig.bind_partial(*args, **kwargs)

            for param_name, validator in validators.items():
                if param_name in bound.arguments:
                    value = bound.arguments[param_name]
                    if validator(value) is False:
                        raise InputError(
                            f"Validation échouée pour le paramètre '{param_name}' (valeur {value!r})"
                        )

            return func(*args, **kwargs)

        return wrapper

    return decorator
