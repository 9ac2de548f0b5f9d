"""
Module exterior - Algèbre extérieure exacte sur un ouvert de coordonnées de R^n
"""

from .linear import LinearEndo
from .multiindex import MultiIndex, basis
from .operators import (
    contract,
    directional_derivative,
    evaluate,
    exterior_derivative,
    lie_derivative,
    pullback_linear,
    wedge,
)
from .polynomial import Polynomial
from .printing import format_polynomial, format_tensor
from .tensors import ConstantTensor, GradedTensor, KForm, KVector, Point, Variance

__all__ = [
    # Types
    "Polynomial",
    "MultiIndex",
    "Variance",
    "GradedTensor",
    "KForm",
    "KVector",
    "ConstantTensor",
    "Point",
    "LinearEndo",
    # Combinatoire
    "basis",
    # Opérateurs
    "wedge",
    "exterior_derivative",
    "contract",
    "lie_derivative",
    "directional_derivative",
    "evaluate",
    "pullback_linear",
    # Affichage
    "format_polynomial",
    "format_tensor",
]
