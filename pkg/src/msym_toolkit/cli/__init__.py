"""
Module cli - Parseur de formes, catalogue, commandes et rapports
"""

from .catalog import CatalogEntry, catalog_from_options, catalog_get, parse_catalog_name
from .main import main, run_command
from .parser import FormExpression, parse_expression, parse_form
from .report import AnalysisReport

__all__ = [
    "parse_form",
    "parse_expression",
    "FormExpression",
    "CatalogEntry",
    "catalog_get",
    "catalog_from_options",
    "parse_catalog_name",
    "AnalysisReport",
    "run_command",
    "main",
]
