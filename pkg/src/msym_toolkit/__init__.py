"""
msym-toolkit - Calcul extérieur exact pour les structures multisymplectiques
"""

__version__ = "1.0.0"
