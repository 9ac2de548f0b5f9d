"""
Module schouten - Crochet de Schouten-Nijenhuis et identités graduées
"""

from .bracket import schouten_bracket, vector_lie_bracket
from .identities import GradedIdentityReport, run_identity, sign, verify_graded_identities

__all__ = [
    "vector_lie_bracket",
    "schouten_bracket",
    "GradedIdentityReport",
    "verify_graded_identities",
    "run_identity",
    "sign",
]
