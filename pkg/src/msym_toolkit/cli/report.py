"""
Rapport d'analyse et sérialisation déterministe (JSON ou texte)
"""

from dataclasses import dataclass, field
from typing import Any

from msym_toolkit.core.exceptions import InputError
from msym_toolkit.utils.helpers import json_pretty_print, to_jsonable

OUTPUT_FORMATS = ("text", "json")


@dataclass(frozen=True)
class AnalysisReport:
    """
    Rapport d'une commande

    Même argv et même graine donnent une sortie identique octet pour octet :
    aucune date ni durée n'y figure, les clés sont triées.
    """

    command: str
    inputs: dict[str, Any]
    results: dict[str, Any]
    seed: int
    version: str
    passed: bool = field(default=True)

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "seed": self.seed,
            "version": self.version,
        }

    def render(self, output_format: str = "text") -> str:
        if output_format == "json":
            return json_pretty_print(self.to_dict()) + "\n"
        if output_format == "text":
            return "\n".join(_text_lines(to_jsonable(self.to_dict()), 0)) + "\n"
        raise InputError(f"format de sortie inconnu: {output_format!r} ({', '.join(OUTPUT_FORMATS)})")


def _scalar(value: Any) -> str:
    if isinstance(value, dict | list):
        return "{}" if isinstance(value, dict) else "[]"
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _text_lines(data: Any, depth: int) -> list[str]:
    pad = "  " * depth
    lines: list[str] = []
    if isinstance(data, dict):
        for key in sorted(data):
            value = data[key]
            if isinstance(value, dict | list) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(value, depth + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, dict | list) and item:
                lines.append(f"{pad}-")
                lines.extend(_text_lines(item, depth + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(data)}")
    return lines
