"""
Polynômes multivariés exacts à coefficients rationnels

Enveloppe immuable d'un `PolyElement` sympy de l'anneau QQ[x1, ..., xn].
Les coefficients exposés à l'extérieur sont des `Fraction` ; l'arithmétique,
la dérivation, l'évaluation, la composition et la division sont celles de sympy.

Exemple (2 variables x1, x2) :
    x1^2 * x2 + 3  →  terms = {(2, 1): Fraction(1), (0, 0): Fraction(3)}
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from typing import Any

import sympy
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from msym_toolkit.core.exceptions import DimensionMismatchError, InputError

Exponent = tuple[int, ...]
Scalar = int | Fraction


@lru_cache(maxsize=None)
def coordinate_ring(dim: int) -> PolyRing:
    """L'anneau QQ[x1, ..., x_dim], partagé par tous les polynômes de même dimension"""
    if dim < 1:
        raise InputError(f"nombre de variables invalide: {dim}")
    return PolyRing(sympy.symbols(f"x1:{dim + 1}"), QQ)


def to_qq(value: Scalar) -> Any:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class Polynomial:
    """Polynôme exact en `dim` variables"""

    __slots__ = ("dim", "_poly", "_hash")

    def __init__(self, dim: int, terms: Mapping[Exponent, Scalar] | None = None):
        ring = coordinate_ring(dim)
        coeffs = {}
        for mono, coeff in (terms or {}).items():
            if len(mono) != dim or any(e < 0 for e in mono):
                raise InputError(f"exposant invalide {mono} pour {dim} variables")
            coeffs[tuple(mono)] = to_qq(coeff)
        self.dim = dim
        self._poly: PolyElement = ring.from_dict(coeffs)
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, dim: int, poly: PolyElement) -> Polynomial:
        out = cls.__new__(cls)
        out.dim = dim
        out._poly = poly
        out._hash = None
        return out

    @property
    def ring(self) -> PolyRing:
        return coordinate_ring(self.dim)

    # --- Constructeurs -----------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> Polynomial:
        return cls._wrap(dim, coordinate_ring(dim).zero)

    @classmethod
    def constant(cls, dim: int, value: Scalar) -> Polynomial:
        return cls._wrap(dim, coordinate_ring(dim).ground_new(to_qq(value)))

    @classmethod
    def variable(cls, dim: int, idx: int) -> Polynomial:
        """La coordonnée x_idx (0-based)"""
        if idx < 0 or idx >= dim:
            raise InputError(f"variable x{idx + 1} hors de 1..{dim}")
        return cls._wrap(dim, coordinate_ring(dim).gens[idx])

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: Scalar = 1) -> Polynomial:
        return cls(len(exponent), {tuple(exponent): coeff})

    # --- Accès -------------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return {mono: to_fraction(c) for mono, c in self._poly.iterterms()}

    def items(self) -> Iterable[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._poly

    def is_constant(self) -> bool:
        return self._poly.is_ground

    def constant_value(self) -> Fraction:
        """Terme constant (la valeur à l'origine)"""
        return to_fraction(self._poly.get(self.ring.zero_monom, QQ.zero))

    def total_degree(self) -> int:
        """Degré total, -1 pour le polynôme nul"""
        return max((sum(mono) for mono in self._poly.itermonoms()), default=-1)

    # --- Arithmétique ------------------------------------------------------

    def _check(self, other: Polynomial) -> None:
        if other.dim != self.dim:
            raise DimensionMismatchError(
                f"polynômes en {self.dim} et {other.dim} variables"
            )

    def _coerce(self, other: object) -> Polynomial | None:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int | Fraction):
            return Polynomial.constant(self.dim, other)
        return None

    def __add__(self, other: object) -> Polynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Polynomial._wrap(self.dim, self._poly + rhs._poly)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._wrap(self.dim, -self._poly)

    def __sub__(self, other: object) -> Polynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Polynomial._wrap(self.dim, self._poly - rhs._poly)

    def __rsub__(self, other: object) -> Polynomial:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> Polynomial:
        if isinstance(other, int | Fraction):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        return Polynomial._wrap(self.dim, self._poly * other._poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise InputError("puissance négative d'un polynôme")
        return Polynomial._wrap(self.dim, self._poly**exponent)

    def scale(self, factor: Scalar) -> Polynomial:
        return Polynomial._wrap(self.dim, self._poly.mul_ground(to_qq(factor)))

    def reweight(self, weight: Callable[[Exponent], Fraction]) -> Polynomial:
        """Multiplie chaque monôme x^α par weight(α)"""
        return Polynomial._wrap(
            self.dim,
            self.ring.from_dict(
                {mono: c * to_qq(weight(mono)) for mono, c in self._poly.iterterms()}
            ),
        )

    def exact_quotient(self, divisor: Polynomial) -> Polynomial | None:
        """
        Le quotient q avec self = q · divisor, s'il existe

        Raises:
            ZeroDivisionError: divisor nul
        """
        self._check(divisor)
        quotient, remainder = self._poly.div(divisor._poly)
        if remainder:
            return None
        return Polynomial._wrap(self.dim, quotient)

    # --- Calcul ------------------------------------------------------------

    def diff(self, idx: int) -> Polynomial:
        """Dérivée partielle ∂/∂x_idx (0-based)"""
        return Polynomial._wrap(self.dim, self._poly.diff(self.ring.gens[idx]))

    def evaluate(self, coords: Sequence[Scalar]) -> Fraction:
        """Valeur exacte au point `coords`"""
        if len(coords) != self.dim:
            raise DimensionMismatchError(
                f"point de dimension {len(coords)} pour {self.dim} variables"
            )
        if self.is_constant():
            return self.constant_value()
        values = [to_qq(c) for c in coords]
        return to_fraction(self._poly.evaluate(list(zip(self.ring.gens, values, strict=True))))

    def substitute_linear(self, rows: Sequence[Sequence[Fraction]]) -> Polynomial:
        """
        Composition p(Ax) avec la matrice A donnée par ses lignes

        Args:
            rows: Matrice carrée dim × dim

        Returns:
            Le polynôme x ↦ p(Ax)
        """
        if len(rows) != self.dim:
            raise DimensionMismatchError(f"matrice {len(rows)}×· pour {self.dim} variables")
        gens = self.ring.gens
        images = [
            sum((gen.mul_ground(to_qq(a)) for gen, a in zip(gens, row, strict=True)), self.ring.zero)
            for row in rows
        ]
        return Polynomial._wrap(self.dim, self._poly.compose(list(zip(gens, images, strict=True))))

    # --- Égalité -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.dim == other.dim and self._poly == other._poly

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, frozenset(self._poly.iterterms())))
        return self._hash

    def __repr__(self) -> str:
        from msym_toolkit.exterior.printing import format_polynomial

        return f"Polynomial({self.dim}, {format_polynomial(self)!r})"
