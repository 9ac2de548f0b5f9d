"""
Crochet de Schouten-Nijenhuis des champs de multivecteurs polynomiaux

Convention de signe : i([X, Y]) = (-1)^(p-1) [L(X), i(Y)], d'où
L([X, Y]) = L(X)L(Y) − (-1)^((p-1)(q-1)) L(Y)L(X) pour |X| = p, |Y| = q.

Sur des termes f∂_I, g∂_J (positions s, t comptées depuis 0) :

    [f∂_I, g∂_J] = (-1)^(p+1) Σ_s (-1)^s f ∂_{i_s}g ∂_{I∖i_s} ∧ ∂_J
                   − Σ_t (-1)^t g ∂_{j_t}f ∂_I ∧ ∂_{J∖j_t}

Avec cette convention la règle de Leibniz s'écrit
[X, Y∧Z] = [X, Y]∧Z + (-1)^((p-1)q) Y∧[X, Z] ; le signe (-1)^((p+1)(q+1))
parfois cité ne coïncide avec celui-ci que pour p impair.
"""

from msym_toolkit.core.exceptions import DegreeError, VarianceError
from msym_toolkit.core.validators import check_same_dim
from msym_toolkit.exterior.multiindex import MultiIndex, merge
from msym_toolkit.exterior.operators import directional_derivative
from msym_toolkit.exterior.polynomial import Polynomial
from msym_toolkit.exterior.tensors import KVector


def _require_vectors(*items: object) -> None:
    for item in items:
        if not isinstance(item, KVector):
            raise VarianceError(f"KVector attendu, reçu {type(item).__name__}")


def vector_lie_bracket(X: KVector, Y: KVector) -> KVector:
    """[X, Y]^i = X(Y^i) − Y(X^i)"""
    _require_vectors(X, Y)
    dim = check_same_dim(X, Y)
    if X.degree != 1 or Y.degree != 1:
        raise DegreeError(f"champs de vecteurs attendus, degrés {X.degree} et {Y.degree}")
    return KVector(
        dim,
        1,
        {
            (i,): directional_derivative(X, Y.coefficient((i,)))
            - directional_derivative(Y, X.coefficient((i,)))
            for i in range(dim)
        },
    )


def schouten_bracket(X: KVector, Y: KVector) -> KVector:
    """
    Crochet de Schouten-Nijenhuis [X, Y] de degré p + q − 1

    Un degré résultat hors de 0..dim donne l'objet nul de ce degré.
    """
    _require_vectors(X, Y)
    dim = check_same_dim(X, Y)
    p, q = X.degree, Y.degree
    degree = p + q - 1
    if degree < 0 or degree > dim or X.is_vacuous() or Y.is_vacuous():
        return KVector.zero(dim, degree)

    lead = 1 if p % 2 else -1
    terms: dict[MultiIndex, Polynomial] = {}

    def add(index: MultiIndex | None, coeff: Polynomial, sign: int) -> None:
        if index is None or coeff.is_zero():
            return
        signed = coeff if sign > 0 else -coeff
        terms[index] = terms[index] + signed if index in terms else signed

    for left, f in X.items():
        for right, g in Y.items():
            for s, i in enumerate(left):
                index, sign = merge(left[:s] + left[s + 1 :], right)
                add(index, f * g.diff(i), lead * (-1) ** s * sign)
            for t, j in enumerate(right):
                index, sign = merge(left, right[:t] + right[t + 1 :])
                add(index, g * f.diff(j), -((-1) ** t) * sign)
    return KVector(dim, degree, terms)
