"""
Structure multisymplectique candidate (Ω fermée de degré k, 2 ≤ k ≤ n)
"""

from dataclasses import dataclass, field

from msym_toolkit.core.exceptions import InputError, VarianceError
from msym_toolkit.core.validators import NumericRangeValidator
from msym_toolkit.exterior.operators import exterior_derivative
from msym_toolkit.exterior.tensors import KForm


@dataclass(frozen=True)
class MultisymplecticStructure:
    """
    Forme fermée de degré k sur un ouvert de R^n

    La fermeture est vérifiée à la construction ; la 1-non-dégénérescence
    ne l'est pas (voir `nondegeneracy_report`).
    """

    omega: KForm
    closed: bool = field(init=False)

    def __post_init__(self):
        if not isinstance(self.omega, KForm):
            raise VarianceError(f"forme attendue, reçu {type(self.omega).__name__}")
        NumericRangeValidator(2, self.omega.dim, what="degré de Ω")(self.omega.degree)
        closed = exterior_derivative(self.omega, strict=False).is_zero()
        if not closed:
            raise InputError("Ω n'est pas fermée (dΩ ≠ 0)")
        object.__setattr__(self, "closed", closed)

    @property
    def dim(self) -> int:
        return self.omega.dim

    @property
    def degree(self) -> int:
        return self.omega.degree

    @property
    def is_constant(self) -> bool:
        return self.omega.is_constant()
