"""
Matrices de contraction Ω̂_m(x) : Λ^m(T_x) → Λ^(k−m)(T*_x) et
rapport de non-dégénérescence aux points d'échantillonnage
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any

import sympy

from msym_toolkit.core.config import get_config
from msym_toolkit.core.exceptions import ContractViolation, DimensionMismatchError
from msym_toolkit.core.validators import NumericRangeValidator
from msym_toolkit.exterior import linalg
from msym_toolkit.exterior.multiindex import basis
from msym_toolkit.exterior.operators import contract
from msym_toolkit.exterior.printing import format_tensor
from msym_toolkit.exterior.sampling import make_rng, random_point
from msym_toolkit.exterior.tensors import ConstantTensor, KForm, KVector, Point, Variance
from msym_toolkit.monitoring.logger import get_logger
from msym_toolkit.utils.decorators import log_call, validate_inputs

from .structure import MultisymplecticStructure

logger = get_logger(__name__)


@dataclass(frozen=True)
class OmegaHatMatrix:
    """Ω̂_m en un point, dans les bases lexicographiques"""

    m: int
    point: Point
    matrix: tuple[tuple[Fraction, ...], ...]
    rank: int
    kernel: tuple[ConstantTensor, ...]

    @property
    def kernel_dimension(self) -> int:
        return len(self.kernel)

    @property
    def domain_dimension(self) -> int:
        return self.rank + self.kernel_dimension

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "point": list(self.point.coords),
            "rank": self.rank,
            "kernel_dimension": self.kernel_dimension,
            "kernel": [format_tensor(v.to_tensor()) for v in self.kernel],
        }


def constant_contraction_matrix(omega_x: KForm, m: int) -> list[list[Fraction]]:
    """
    Matrice de v ↦ i(v)ω pour une forme à coefficients constants

    Colonnes indexées par basis(n, m), lignes par basis(n, k − m).
    """
    dim = omega_x.dim
    columns = [
        contract(KVector.basis_element(dim, index), omega_x)
        .evaluate(Point((0,) * dim))
        .to_vector()
        for index in basis(dim, m)
    ]
    return linalg.transpose(columns, len(basis(dim, omega_x.degree - m)))


@log_call("omega_hat_computed")
def omega_hat(S: MultisymplecticStructure, m: int, point: Point) -> OmegaHatMatrix:
    """
    Matrice, rang et noyau de Ω̂_m au point donné

    Args:
        S: Structure multisymplectique
        m: Degré de contraction, 1 ≤ m ≤ k − 1
        point: Point d'évaluation

    Returns:
        OmegaHatMatrix dont chaque vecteur du noyau est certifié
    """
    NumericRangeValidator(1, S.degree - 1, what="m")(m)
    if point.dim != S.dim:
        raise DimensionMismatchError(f"point de dimension {point.dim} pour n = {S.dim}")

    omega_x = S.omega.evaluate(point).to_tensor()
    matrix = constant_contraction_matrix(omega_x, m)
    ncols = comb(S.dim, m)
    kernel = tuple(
        ConstantTensor.from_vector(S.dim, m, Variance.VECTOR, vector)
        for vector in linalg.nullspace(matrix, ncols)
    )
    for vector in kernel:
        if not contract(vector.to_tensor(), omega_x).is_zero():
            raise ContractViolation(f"vecteur du noyau non annulé: {format_tensor(vector.to_tensor())}")

    rank = ncols - len(kernel)
    return OmegaHatMatrix(
        m=m,
        point=point,
        matrix=tuple(tuple(row) for row in matrix),
        rank=rank,
        kernel=kernel,
    )


@validate_inputs(dim=NumericRangeValidator(1, None, what="dimension"))
def kernel_floor(dim: int, k: int, m: int) -> int:
    """Dimension minimale du noyau : max(0, C(n, m) − C(n, k − m))"""
    return max(0, comb(dim, m) - comb(dim, k - m))


def default_sample_points(dim: int, seed: int | None = None, random_count: int | None = None) -> list[Point]:
    """
    Points déterministes puis points aléatoires avec graine

    Points unitaires e_i, un point à coordonnées premières distinctes,
    un point (1/2, 1/3, 1/5, ...) puis `random_count` points tirés.
    """
    config = get_config()
    seed = config.default_seed if seed is None else seed
    random_count = config.random_sample_points if random_count is None else random_count

    primes = [int(p) for p in sympy.primerange(2, sympy.prime(dim) + 1)]
    points = [Point(tuple(1 if j == i else 0 for j in range(dim))) for i in range(dim)]
    points.append(Point(tuple(primes)))
    points.append(Point(tuple(Fraction(1, p) for p in primes)))
    rng = make_rng(seed)
    points.extend(random_point(rng, dim) for _ in range(random_count))
    return points


@dataclass(frozen=True)
class DegreeNondegeneracy:
    """Résumé de Ω̂_m sur l'échantillon"""

    m: int
    floor: int
    min_kernel_dimension: int
    max_kernel_dimension: int

    @property
    def nondegenerate(self) -> bool:
        return self.max_kernel_dimension == self.floor

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "floor": self.floor,
            "min_kernel_dimension": self.min_kernel_dimension,
            "max_kernel_dimension": self.max_kernel_dimension,
            "nondegenerate": self.nondegenerate,
        }


@dataclass(frozen=True)
class NondegeneracyReport:
    """
    Non-dégénérescence certifiée aux seuls points échantillonnés

    m-non-dégénérée ⇔ noyau de dimension minimale en chaque point.
    """

    dim: int
    degree: int
    closed: bool
    points: tuple[Point, ...]
    degrees: tuple[DegreeNondegeneracy, ...]

    @property
    def strongly_nondegenerate(self) -> bool:
        return all(entry.nondegenerate for entry in self.degrees)

    @property
    def one_nondegenerate(self) -> bool:
        return self.degrees[0].nondegenerate and self.degrees[0].max_kernel_dimension == 0

    @property
    def multisymplectic(self) -> bool:
        return self.closed and self.one_nondegenerate

    def to_dict(self) -> dict[str, Any]:
        return {
            "dim": self.dim,
            "degree": self.degree,
            "closed": self.closed,
            "sample_points": [list(p.coords) for p in self.points],
            "degrees": [entry.to_dict() for entry in self.degrees],
            "strongly_nondegenerate": self.strongly_nondegenerate,
            "multisymplectic": self.multisymplectic,
        }


@log_call("nondegeneracy_reported")
def nondegeneracy_report(
    S: MultisymplecticStructure, sample_points: list[Point] | None = None
) -> NondegeneracyReport:
    """
    Agrège Ω̂_m pour m = 1..k−1 sur les points d'échantillonnage

    Args:
        S: Structure à analyser
        sample_points: Points (par défaut `default_sample_points`)
    """
    points = tuple(sample_points) if sample_points else tuple(default_sample_points(S.dim))
    entries = []
    for m in range(1, S.degree):
        dims = [omega_hat(S, m, p).kernel_dimension for p in points]
        entries.append(
            DegreeNondegeneracy(
                m=m,
                floor=kernel_floor(S.dim, S.degree, m),
                min_kernel_dimension=min(dims),
                max_kernel_dimension=max(dims),
            )
        )
        logger.debug("kernel_dimensions_sampled", m=m, dims=dims)
    return NondegeneracyReport(
        dim=S.dim,
        degree=S.degree,
        closed=S.closed,
        points=points,
        degrees=tuple(entries),
    )
