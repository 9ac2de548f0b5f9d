"""
Fonctions utilitaires générales
"""

import json
from enum import Enum
from fractions import Fraction
from typing import Any


def format_rational(value: Fraction | int) -> str:
    """Formate un rationnel en `p` ou `p/q`"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_jsonable(data: Any) -> Any:
    """Convertit récursivement une structure en types JSON natifs"""
    if isinstance(data, bool) or data is None:
        return data
    if isinstance(data, Fraction):
        return format_rational(data)
    if isinstance(data, Enum):
        return data.value
    if isinstance(data, int | float | str):
        return data
    if isinstance(data, dict):
        return {str(key): to_jsonable(value) for key, value in data.items()}
    if isinstance(data, list | tuple):
        return [to_jsonable(item) for item in data]
    if hasattr(data, "to_dict"):
        return to_jsonable(data.to_dict())
    return str(data)


def json_pretty_print(data: Any) -> str:
    """Sérialise en JSON formaté, clés triées (sortie déterministe)"""
    return json.dumps(to_jsonable(data), indent=2, sort_keys=True, ensure_ascii=False)
