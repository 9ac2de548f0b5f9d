"""
Hiérarchie des erreurs de la boîte à outils
"""


class ToolkitError(Exception):
    """Classe de base de toutes les erreurs de la boîte à outils"""

    exit_code: int = 1


class InputError(ToolkitError):
    """Entrée invalide (arguments, dimensions, degrés, syntaxe)"""

    exit_code = 2


class DimensionMismatchError(InputError):
    """Objets définis sur des patchs de dimensions différentes"""

    pass


class DegreeError(InputError):
    """Degré hors de la plage autorisée pour l'opération"""

    pass


class VarianceError(InputError):
    """Mélange de formes et de multivecteurs"""

    pass


class CatalogError(InputError):
    """Structure inconnue ou paramètres de catalogue invalides"""

    pass


class ParseError(InputError):
    """Erreur lexicale ou syntaxique dans une expression de forme"""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"{message} (ligne {line}, colonne {column})"
        super().__init__(message)


class ContractViolation(ToolkitError):
    """Une hypothèse documentée d'une opération n'est pas satisfaite"""

    exit_code = 3
