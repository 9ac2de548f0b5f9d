"""
Engendrement des espaces tangents par des champs localement hamiltoniens

Pour Ω à coefficients constants, les champs constants sont localement
hamiltoniens ; on leur ajoute les champs hamiltoniens de formes monomiales
simples puis on mesure le rang de leurs valeurs aux points d'échantillonnage.
"""

from dataclasses import dataclass
from math import comb
from typing import Any

from msym_toolkit.core.exceptions import ContractViolation, InputError
from msym_toolkit.exterior import linalg
from msym_toolkit.exterior.multiindex import basis
from msym_toolkit.exterior.operators import lie_derivative
from msym_toolkit.exterior.polynomial import Polynomial
from msym_toolkit.exterior.printing import format_tensor
from msym_toolkit.exterior.tensors import KForm, KVector, Point
from msym_toolkit.monitoring.logger import get_logger
from msym_toolkit.utils.decorators import log_call

from .hamiltonian import hamiltonian_field
from .omega_hat import default_sample_points
from .structure import MultisymplecticStructure

logger = get_logger(__name__)


@dataclass(frozen=True)
class SpanDegreeReport:
    """Rang des valeurs de la famille en chaque point, pour un degré m"""

    m: int
    target: int
    family_size: int
    ranks: tuple[int, ...]

    @property
    def spans(self) -> bool:
        return all(rank == self.target for rank in self.ranks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "target": self.target,
            "family_size": self.family_size,
            "ranks": list(self.ranks),
            "spans": self.spans,
        }


@dataclass(frozen=True)
class SpanReport:
    dim: int
    degree: int
    points: tuple[Point, ...]
    entries: tuple[SpanDegreeReport, ...]

    @property
    def spans(self) -> bool:
        return all(entry.spans for entry in self.entries)

    def to_dict(self) -> dict[str, Any]:
        return {
            "dim": self.dim,
            "degree": self.degree,
            "sample_points": [list(p.coords) for p in self.points],
            "entries": [entry.to_dict() for entry in self.entries],
            "spans": self.spans,
        }


def _hamiltonian_sources(S: MultisymplecticStructure, m: int) -> list[KForm]:
    """Formes ζ de degré k − m − 1 dont on prend les champs hamiltoniens"""
    dim = S.dim
    zeta_degree = S.degree - m - 1
    variables = [Polynomial.variable(dim, j) for j in range(dim)]
    if zeta_degree == 0:
        quadratics = [variables[i] * variables[j] for i in range(dim) for j in range(i, dim)]
        return [KForm.function(f) for f in variables + quadratics]
    return [
        KForm.basis_element(dim, index, x)
        for index in basis(dim, zeta_degree)
        for x in variables
    ]


def locally_hamiltonian_family(S: MultisymplecticStructure, m: int) -> list[KVector]:
    """
    Champs constants ∂_J (|J| = m) puis champs hamiltoniens des sources

    Raises:
        ContractViolation: si un champ produit vérifie L(X)Ω ≠ 0
    """
    family = [KVector.basis_element(S.dim, index) for index in basis(S.dim, m)]
    for zeta in _hamiltonian_sources(S, m):
        field = hamiltonian_field(S, zeta, m)
        if field is not None and not field.is_zero():
            family.append(field)
    for field in family:
        if not lie_derivative(field, S.omega).is_zero():
            raise ContractViolation(f"L(X)Ω ≠ 0 pour {format_tensor(field)}")
    return family


@log_call("span_checked")
def span_check(
    S: MultisymplecticStructure, sample_points: list[Point] | None = None
) -> SpanReport:
    """
    Dimension de l'espace engendré par les valeurs des champs localement
    hamiltoniens : cible n pour m = 1, C(n, k − 1) pour m = k − 1

    Args:
        S: Structure à coefficients constants
        sample_points: Points (par défaut `default_sample_points`)
    """
    if not S.is_constant:
        raise InputError("contrôle d'engendrement réservé aux Ω à coefficients constants")
    points = tuple(sample_points) if sample_points else tuple(default_sample_points(S.dim))
    entries = []
    for m in sorted({1, S.degree - 1}):
        family = locally_hamiltonian_family(S, m)
        ncols = comb(S.dim, m)
        ranks = tuple(
            linalg.rank([field.evaluate(p).to_vector() for field in family], ncols)
            for p in points
        )
        entries.append(SpanDegreeReport(m, ncols, len(family), ranks))
        logger.debug("span_ranks", m=m, ranks=list(ranks))
    return SpanReport(S.dim, S.degree, points, tuple(entries))
