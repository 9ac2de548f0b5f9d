"""
Module core - Configuration, erreurs et validation
"""

from .config import SEED_ENV_VAR, ToolkitConfig, get_config, reset_config, update_config
from .exceptions import (
    CatalogError,
    ContractViolation,
    DegreeError,
    DimensionMismatchError,
    InputError,
    ParseError,
    ToolkitError,
    VarianceError,
)
from .validators import (
    NumericRangeValidator,
    RequiredValidator,
    SameDimensionValidator,
    SquareMatrixValidator,
    Validator,
    check_same_dim,
)

__all__ = [
    # Config
    "SEED_ENV_VAR",
    "ToolkitConfig",
    "get_config",
    "update_config",
    "reset_config",
    # Erreurs
    "ToolkitError",
    "InputError",
    "DimensionMismatchError",
    "DegreeError",
    "VarianceError",
    "CatalogError",
    "ParseError",
    "ContractViolation",
    # Validation
    "Validator",
    "RequiredValidator",
    "NumericRangeValidator",
    "SameDimensionValidator",
    "SquareMatrixValidator",
    "check_same_dim",
]
