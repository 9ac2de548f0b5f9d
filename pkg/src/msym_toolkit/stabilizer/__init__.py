"""
Module stabilizer - Automorphismes infinitésimaux linéaires des formes constantes
"""

from .algebra import (
    ClosureReport,
    InvariantForms,
    StabilizerResult,
    commutator_closure,
    conformal_stabilizer,
    invariant_forms,
    special_conformal_check,
    stabilizer_algebra,
)
from .conformal import verify_conformal_bracket

__all__ = [
    "StabilizerResult",
    "InvariantForms",
    "ClosureReport",
    "stabilizer_algebra",
    "conformal_stabilizer",
    "invariant_forms",
    "commutator_closure",
    "special_conformal_check",
    "verify_conformal_bracket",
]
