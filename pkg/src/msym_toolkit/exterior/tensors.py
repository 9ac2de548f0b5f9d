"""
Formes différentielles et champs de multivecteurs à coefficients polynomiaux

KForm et KVector partagent la même représentation : un dictionnaire creux
multi-index (strictement croissant, 0-based) → Polynomial. Un degré hors de
0..dim n'existe que comme objet nul ("vacuous"), produit par exemple par un
produit extérieur qui déborde.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import ClassVar

from msym_toolkit.core.exceptions import (
    DegreeError,
    DimensionMismatchError,
    InputError,
    VarianceError,
)

from .multiindex import MultiIndex, basis, basis_position, sort_with_sign
from .polynomial import Polynomial, Scalar


class Variance(StrEnum):
    """Nature d'un tenseur antisymétrique"""

    FORM = "form"
    VECTOR = "vector"


@dataclass(frozen=True)
class Point:
    """Point à coordonnées rationnelles"""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords)


def _normalize(
    dim: int, degree: int, terms: Mapping[Sequence[int], Polynomial | Scalar]
) -> dict[MultiIndex, Polynomial]:
    out: dict[MultiIndex, Polynomial] = {}
    for raw_index, raw_coeff in terms.items():
        raw_index = tuple(raw_index)
        if len(raw_index) != degree:
            raise DegreeError(f"multi-index {raw_index} de longueur ≠ {degree}")
        if any(i < 0 or i >= dim for i in raw_index):
            raise InputError(f"indice hors de 1..{dim} dans {tuple(i + 1 for i in raw_index)}")
        index, sign = sort_with_sign(raw_index)
        if index is None:
            continue
        if isinstance(raw_coeff, Polynomial):
            if raw_coeff.dim != dim:
                raise DimensionMismatchError(
                    f"coefficient en {raw_coeff.dim} variables pour la dimension {dim}"
                )
            coeff = raw_coeff
        else:
            coeff = Polynomial.constant(dim, raw_coeff)
        if sign < 0:
            coeff = -coeff
        out[index] = out[index] + coeff if index in out else coeff
    return {index: coeff for index, coeff in out.items() if not coeff.is_zero()}


def _is_zero(coeff: Polynomial | Scalar) -> bool:
    return coeff.is_zero() if isinstance(coeff, Polynomial) else Fraction(coeff) == 0


class GradedTensor:
    """Base commune des formes et multivecteurs homogènes"""

    variance: ClassVar[Variance]
    symbol: ClassVar[str]

    __slots__ = ("dim", "degree", "_terms", "_hash")

    def __init__(
        self,
        dim: int,
        degree: int,
        terms: Mapping[Sequence[int], Polynomial | Scalar] | None = None,
    ):
        if dim < 1:
            raise InputError(f"dimension invalide: {dim}")
        self.dim = dim
        self.degree = degree
        if 0 <= degree <= dim:
            self._terms = _normalize(dim, degree, terms or {})
        elif any(not _is_zero(c) for c in (terms or {}).values()):
            raise DegreeError(f"degré {degree} hors de 0..{dim}")
        else:
            self._terms = {}
        self._hash: int | None = None

    # --- Constructeurs -----------------------------------------------------

    @classmethod
    def zero(cls, dim: int, degree: int):
        return cls(dim, degree)

    @classmethod
    def function(cls, coeff: Polynomial):
        """Tenseur de degré 0 (une fonction)"""
        return cls(coeff.dim, 0, {(): coeff})

    @classmethod
    def basis_element(cls, dim: int, index: Sequence[int], coeff: Polynomial | Scalar = 1):
        """dx_I (ou ∂_I) avec I 0-based, éventuellement non trié"""
        return cls(dim, len(index), {tuple(index): coeff})

    @classmethod
    def coordinate(cls, dim: int, idx: int):
        """dx_idx ou ∂_idx (0-based)"""
        return cls.basis_element(dim, (idx,))

    def _new(self, degree: int, terms: Mapping[Sequence[int], Polynomial | Scalar]):
        return type(self)(self.dim, degree, terms)

    # --- Accès -------------------------------------------------------------

    @property
    def terms(self) -> dict[MultiIndex, Polynomial]:
        return dict(self._terms)

    def items(self) -> list[tuple[MultiIndex, Polynomial]]:
        """Termes triés par multi-index lexicographique"""
        return sorted(self._terms.items())

    def coefficient(self, index: Sequence[int]) -> Polynomial:
        return self._terms.get(tuple(index), Polynomial.zero(self.dim))

    def is_zero(self) -> bool:
        return not self._terms

    def is_vacuous(self) -> bool:
        return not (0 <= self.degree <= self.dim)

    def is_constant(self) -> bool:
        """Vrai si tous les coefficients sont constants"""
        return all(coeff.is_constant() for coeff in self._terms.values())

    # --- Arithmétique ------------------------------------------------------

    def _compatible(self, other: GradedTensor) -> None:
        if other.variance is not self.variance:
            raise VarianceError(f"{self.variance} et {other.variance} ne s'additionnent pas")
        if other.dim != self.dim:
            raise DimensionMismatchError(f"dimensions {self.dim} et {other.dim}")

    def __add__(self, other: object):
        if not isinstance(other, GradedTensor):
            return NotImplemented
        self._compatible(other)
        if other.degree != self.degree:
            if other.is_zero():
                return self
            if self.is_zero():
                return other
            raise DegreeError(f"somme de degrés {self.degree} et {other.degree}")
        out = dict(self._terms)
        for index, coeff in other._terms.items():
            out[index] = out[index] + coeff if index in out else coeff
        return self._new(self.degree, out)

    def __neg__(self):
        return self._new(self.degree, {index: -c for index, c in self._terms.items()})

    def __sub__(self, other: object):
        if not isinstance(other, GradedTensor):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object):
        """Multiplication par une fonction ou un scalaire"""
        if isinstance(other, int | Fraction):
            return self._new(self.degree, {i: c.scale(other) for i, c in self._terms.items()})
        if isinstance(other, Polynomial):
            if other.dim != self.dim:
                raise DimensionMismatchError(f"dimensions {self.dim} et {other.dim}")
            return self._new(self.degree, {i: c * other for i, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def map_coefficients(self, fn) -> GradedTensor:
        """Applique `fn` à chaque coefficient polynomial"""
        return self._new(self.degree, {i: fn(c) for i, c in self._terms.items()})

    # --- Évaluation --------------------------------------------------------

    def evaluate(self, point: Point) -> ConstantTensor:
        """Valeur exacte au point donné"""
        if point.dim != self.dim:
            raise DimensionMismatchError(
                f"point de dimension {point.dim} pour un tenseur de dimension {self.dim}"
            )
        return ConstantTensor(
            self.dim,
            self.degree,
            self.variance,
            {index: coeff.evaluate(point.coords) for index, coeff in self._terms.items()},
        )

    # --- Égalité -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedTensor):
            return NotImplemented
        return (
            self.variance is other.variance
            and self.dim == other.dim
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.variance, self.dim, self.degree, frozenset(self._terms.items()))
            )
        return self._hash

    def __repr__(self) -> str:
        from .printing import format_tensor

        return f"{type(self).__name__}(dim={self.dim}, degree={self.degree}, {format_tensor(self)!r})"


class KForm(GradedTensor):
    """Forme différentielle homogène de degré k"""

    variance = Variance.FORM
    symbol = "dx"
    __slots__ = ()


class KVector(GradedTensor):
    """Champ de multivecteurs homogène de degré m"""

    variance = Variance.VECTOR
    symbol = "e"
    __slots__ = ()


TENSOR_CLASSES: dict[Variance, type[GradedTensor]] = {
    Variance.FORM: KForm,
    Variance.VECTOR: KVector,
}


class ConstantTensor:
    """Valeur ponctuelle d'une forme ou d'un multivecteur (coefficients rationnels)"""

    __slots__ = ("dim", "degree", "variance", "_terms")

    def __init__(
        self,
        dim: int,
        degree: int,
        variance: Variance,
        terms: Mapping[Sequence[int], Scalar] | None = None,
    ):
        self.dim = dim
        self.degree = degree
        self.variance = Variance(variance)
        normalized = _normalize(dim, degree, terms or {}) if 0 <= degree <= dim else {}
        self._terms = {index: coeff.constant_value() for index, coeff in normalized.items()}

    @classmethod
    def from_vector(
        cls, dim: int, degree: int, variance: Variance, values: Sequence[Scalar]
    ) -> ConstantTensor:
        """Construit depuis les coordonnées dans la base lexicographique"""
        indices = basis(dim, degree)
        if len(values) != len(indices):
            raise DimensionMismatchError(
                f"{len(values)} coordonnées pour une base de taille {len(indices)}"
            )
        return cls(dim, degree, variance, dict(zip(indices, values, strict=True)))

    def to_vector(self) -> list[Fraction]:
        """Coordonnées dans la base lexicographique"""
        values = [Fraction(0)] * len(basis(self.dim, self.degree))
        positions = basis_position(self.dim, self.degree)
        for index, coeff in self._terms.items():
            values[positions[index]] = coeff
        return values

    def to_tensor(self) -> GradedTensor:
        """Le tenseur à coefficients constants correspondant"""
        return TENSOR_CLASSES[self.variance](self.dim, self.degree, dict(self._terms))

    @property
    def terms(self) -> dict[MultiIndex, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[MultiIndex, Fraction]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def scale(self, factor: Scalar) -> ConstantTensor:
        return ConstantTensor(
            self.dim, self.degree, self.variance,
            {i: c * Fraction(factor) for i, c in self._terms.items()},
        )

    def __add__(self, other: object) -> ConstantTensor:
        if not isinstance(other, ConstantTensor):
            return NotImplemented
        total = self.to_tensor() + other.to_tensor()
        return ConstantTensor(
            total.dim, total.degree, total.variance,
            {i: c.constant_value() for i, c in total.items()},
        )

    def __neg__(self) -> ConstantTensor:
        return self.scale(-1)

    def __sub__(self, other: object) -> ConstantTensor:
        if not isinstance(other, ConstantTensor):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConstantTensor):
            return NotImplemented
        return (
            self.variance is other.variance
            and self.dim == other.dim
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.variance, self.dim, self.degree, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        from .printing import format_tensor

        return f"ConstantTensor({self.variance}, {format_tensor(self.to_tensor())!r})"

