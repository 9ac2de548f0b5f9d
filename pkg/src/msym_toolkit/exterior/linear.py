"""
Endomorphismes linéaires de R^n

Une matrice A est lue soit comme champ de vecteurs linéaire
X_A = Σ_i (Ax)^i ∂_i, soit comme difféomorphisme linéaire x ↦ Ax.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from msym_toolkit.core.exceptions import DimensionMismatchError
from msym_toolkit.core.validators import SquareMatrixValidator

from . import linalg
from .polynomial import Polynomial, Scalar
from .tensors import KVector


@dataclass(frozen=True)
class LinearEndo:
    """Matrice carrée rationnelle n×n (lignes)"""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        SquareMatrixValidator()(self.rows)
        object.__setattr__(
            self, "rows", tuple(tuple(Fraction(v) for v in row) for row in self.rows)
        )

    # --- Constructeurs -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar | str]]) -> LinearEndo:
        return cls(tuple(tuple(Fraction(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, size: int) -> LinearEndo:
        return cls.scalar(size, 1)

    @classmethod
    def scalar(cls, size: int, value: Scalar) -> LinearEndo:
        return cls(
            tuple(
                tuple(Fraction(value) if i == j else Fraction(0) for j in range(size))
                for i in range(size)
            )
        )

    @classmethod
    def elementary(cls, size: int, i: int, j: int) -> LinearEndo:
        """E_ij : 1 en ligne i, colonne j (0-based)"""
        return cls(
            tuple(
                tuple(Fraction(1) if (r, c) == (i, j) else Fraction(0) for c in range(size))
                for r in range(size)
            )
        )

    @classmethod
    def from_flat(cls, size: int, values: Sequence[Scalar]) -> LinearEndo:
        """Inverse de `flatten` (ordre ligne par ligne)"""
        if len(values) != size * size:
            raise DimensionMismatchError(f"{len(values)} valeurs pour une matrice {size}×{size}")
        return cls(tuple(tuple(values[i * size : (i + 1) * size]) for i in range(size)))

    # --- Algèbre -----------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.rows)

    def _check(self, other: LinearEndo) -> None:
        if other.size != self.size:
            raise DimensionMismatchError(f"matrices {self.size}×{self.size} et {other.size}×{other.size}")

    def __matmul__(self, other: LinearEndo) -> LinearEndo:
        self._check(other)
        n = self.size
        return LinearEndo(
            tuple(
                tuple(sum((self.rows[i][k] * other.rows[k][j] for k in range(n)), Fraction(0)) for j in range(n))
                for i in range(n)
            )
        )

    def __add__(self, other: LinearEndo) -> LinearEndo:
        self._check(other)
        return LinearEndo(
            tuple(tuple(a + b for a, b in zip(r, s, strict=True)) for r, s in zip(self.rows, other.rows, strict=True))
        )

    def __sub__(self, other: LinearEndo) -> LinearEndo:
        return self + other.scale(-1)

    def scale(self, factor: Scalar) -> LinearEndo:
        return LinearEndo(tuple(tuple(v * Fraction(factor) for v in row) for row in self.rows))

    def commutator(self, other: LinearEndo) -> LinearEndo:
        """[A, B] = AB − BA"""
        return self @ other - other @ self

    def transpose(self) -> LinearEndo:
        return LinearEndo(tuple(zip(*self.rows, strict=True)))

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.size)), Fraction(0))

    def determinant(self) -> Fraction:
        return linalg.determinant(self.rows)

    def is_invertible(self) -> bool:
        return self.determinant() != 0

    def flatten(self) -> list[Fraction]:
        return [v for row in self.rows for v in row]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.flatten())

    # --- Interprétations ---------------------------------------------------

    def as_vector_field(self) -> KVector:
        """X_A = Σ_i (Σ_j A_ij x_j) ∂_i"""
        n = self.size
        components = {}
        for i, row in enumerate(self.rows):
            component = Polynomial.zero(n)
            for j, value in enumerate(row):
                if value:
                    component = component + Polynomial.variable(n, j).scale(value)
            components[(i,)] = component
        return KVector(n, 1, components)
