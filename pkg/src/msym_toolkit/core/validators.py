"""
Validateurs des entrées des opérations
"""

from typing import Any

from .exceptions import DegreeError, DimensionMismatchError, InputError


class Validator:
    """Classe de base pour les validateurs"""

    error_class: type[InputError] = InputError

    def __init__(self, error_message: str = "Validation échouée"):
        self.error_message = error_message

    def validate(self, value: Any) -> bool:
        """Méthode à surcharger pour la validation"""
        raise NotImplementedError

    def __call__(self, value: Any) -> Any:
        """Permet d'utiliser le validateur comme fonction"""
        if not self.validate(value):
            raise self.error_class(f"{self.error_message} (reçu: {value!r})")
        return value


class RequiredValidator(Validator):
    """Valide qu'une valeur n'est pas vide"""

    def __init__(self, what: str = "valeur"):
        super().__init__(f"{what} requise")

    def validate(self, value: Any) -> bool:
        if value is None:
            return False
        if isinstance(value, str) and not value.strip():
            return False
        if isinstance(value, (list, tuple, dict)) and len(value) == 0:
            return False
        return True


class NumericRangeValidator(Validator):
    """Valide qu'un entier est dans une plage (bornes incluses)"""

    error_class = DegreeError

    def __init__(self, min_val: int | None = None, max_val: int | None = None, what: str = "degré"):
        self.min_val = min_val
        self.max_val = max_val
        message = f"{what} doit être"
        if min_val is not None:
            message += f" >= {min_val}"
        if max_val is not None:
            if min_val is not None:
                message += " et"
            message += f" <= {max_val}"
        super().__init__(message)

    def validate(self, value: Any) -> bool:
        if isinstance(value, bool) or not isinstance(value, int):
            return False
        if self.min_val is not None and value < self.min_val:
            return False
        if self.max_val is not None and value > self.max_val:
            return False
        return True


class SameDimensionValidator(Validator):
    """Valide que tous les objets d'une séquence ont la même dimension"""

    error_class = DimensionMismatchError

    def __init__(self):
        super().__init__("dimensions incompatibles")

    def validate(self, value: Any) -> bool:
        dims = {item.dim for item in value}
        return len(dims) <= 1


class SquareMatrixValidator(Validator):
    """Valide qu'une matrice (liste de lignes) est carrée et non vide"""

    def __init__(self, size: int | None = None):
        self.size = size
        message = "matrice carrée attendue"
        if size is not None:
            message += f" de taille {size}"
        super().__init__(message)

    def validate(self, value: Any) -> bool:
        rows = list(value)
        if not rows:
            return False
        if any(len(row) != len(rows) for row in rows):
            return False
        return self.size is None or len(rows) == self.size


def check_same_dim(*items: Any) -> int:
    """
    Vérifie que les objets partagent la même dimension

    Returns:
        La dimension commune
    """
    SameDimensionValidator()(items)
    return items[0].dim
