"""
Opérateur d'homotopie radial K sur les formes polynomiales de R^n

K(c x^α dx_I) = c / (|α| + k) · x^α · i(Δ) dx_I, Δ champ d'Euler,
de sorte que dK + Kd = id en degré k ≥ 1.
"""

from fractions import Fraction

from msym_toolkit.core.exceptions import DegreeError
from msym_toolkit.exterior.linear import LinearEndo
from msym_toolkit.exterior.operators import contract, exterior_derivative
from msym_toolkit.exterior.tensors import KForm, KVector


def euler_field(dim: int) -> KVector:
    """Δ = Σ x_i ∂_i"""
    return LinearEndo.identity(dim).as_vector_field()


def homotopy_operator(a: KForm) -> KForm:
    """
    Primitive radiale d'une forme de degré k ≥ 1

    Raises:
        DegreeError: pour une forme de degré 0 (évaluer à l'origine à la place)
    """
    k = a.degree
    if k < 1 or k > a.dim:
        raise DegreeError(f"opérateur d'homotopie sur une forme de degré {k}")
    weighted = a.map_coefficients(
        lambda coeff: coeff.reweight(lambda mono: Fraction(1, sum(mono) + k))
    )
    return contract(euler_field(a.dim), weighted)


def is_exact(a: KForm) -> bool:
    """
    Exactitude sur R^n : a = d(K(a)) en degré ≥ 1, a = 0 en degré 0
    """
    if a.degree <= 0 or a.is_vacuous():
        return a.is_zero()
    return exterior_derivative(homotopy_operator(a)) == a


def primitive(a: KForm) -> KForm | None:
    """Un ζ avec dζ = a, ou None si a n'est pas exacte"""
    if a.degree < 1 or a.is_vacuous():
        return KForm.zero(a.dim, a.degree - 1) if a.is_zero() else None
    candidate = homotopy_operator(a)
    return candidate if exterior_derivative(candidate) == a else None
