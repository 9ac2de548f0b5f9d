"""
Opérateurs du calcul extérieur

Conventions :
    - i(v_1∧...∧v_m) = i(v_1)∘...∘i(v_m), i(v_m) appliqué en premier ;
    - i(∂_j) dx_I = (-1)^s dx_{I∖j}, s position (0-based) de j dans I ;
    - L(X) = d∘i(X) − (-1)^m i(X)∘d, de degré 1 − m.
"""

from __future__ import annotations

from functools import reduce

from msym_toolkit.core.exceptions import DegreeError, DimensionMismatchError, VarianceError
from msym_toolkit.core.validators import check_same_dim

from .linear import LinearEndo
from .multiindex import MultiIndex, contract_index, insert, merge
from .polynomial import Polynomial
from .tensors import ConstantTensor, GradedTensor, KForm, KVector, Point


def _accumulate(terms: dict[MultiIndex, Polynomial], index: MultiIndex, coeff: Polynomial) -> None:
    terms[index] = terms[index] + coeff if index in terms else coeff


def _require(obj: object, cls: type[GradedTensor], role: str) -> None:
    if not isinstance(obj, cls):
        raise VarianceError(f"{role}: {cls.__name__} attendu, reçu {type(obj).__name__}")


def wedge(a: GradedTensor, b: GradedTensor) -> GradedTensor:
    """
    Produit extérieur de deux tenseurs de même variance

    Un degré total au-delà de la dimension donne l'objet nul de ce degré.
    """
    if a.variance is not b.variance:
        raise VarianceError(f"produit extérieur {a.variance} ∧ {b.variance}")
    dim = check_same_dim(a, b)
    degree = a.degree + b.degree
    cls = type(a)
    if a.is_vacuous() or b.is_vacuous() or degree > dim:
        return cls.zero(dim, degree)

    terms: dict[MultiIndex, Polynomial] = {}
    for left, f in a.items():
        for right, g in b.items():
            index, sign = merge(left, right)
            if index is None:
                continue
            product = f * g
            _accumulate(terms, index, product if sign > 0 else -product)
    return cls(dim, degree, terms)


def exterior_derivative(a: KForm, strict: bool = True) -> KForm:
    """
    Différentielle extérieure d(f dx_I) = Σ_j ∂_j f dx_j ∧ dx_I

    Args:
        a: Forme de degré k
        strict: Si True, un degré k ≥ dim lève DegreeError ; sinon l'objet
            nul de degré k+1 est retourné
    """
    _require(a, KForm, "exterior_derivative")
    dim = a.dim
    if a.degree >= dim or a.degree < 0:
        if strict:
            raise DegreeError(f"d d'une forme de degré {a.degree} en dimension {dim}")
        return KForm.zero(dim, a.degree + 1)

    terms: dict[MultiIndex, Polynomial] = {}
    for index, coeff in a.items():
        for j in range(dim):
            partial = coeff.diff(j)
            if partial.is_zero():
                continue
            merged, sign = insert(index, j)
            if merged is None:
                continue
            _accumulate(terms, merged, partial if sign > 0 else -partial)
    return KForm(dim, a.degree + 1, terms)


def contract(X: KVector, a: KForm, strict: bool = True) -> KForm:
    """
    Produit intérieur i(X)a d'une forme par un multivecteur

    Un multivecteur de degré 0 agit par multiplication.

    Args:
        X: Multivecteur de degré m
        a: Forme de degré k
        strict: Si True, m > k lève DegreeError ; sinon l'objet nul de
            degré k − m est retourné
    """
    _require(X, KVector, "contract")
    _require(a, KForm, "contract")
    dim = check_same_dim(X, a)
    degree = a.degree - X.degree
    if degree < 0 and strict:
        raise DegreeError(f"contraction d'une {a.degree}-forme par un {X.degree}-vecteur")
    if degree < 0 or X.is_vacuous() or a.is_vacuous():
        return KForm.zero(dim, degree)

    terms: dict[MultiIndex, Polynomial] = {}
    for vector_index, g in X.items():
        for form_index, f in a.items():
            index, sign = contract_index(vector_index, form_index)
            if index is None:
                continue
            product = g * f
            _accumulate(terms, index, product if sign > 0 else -product)
    return KForm(dim, degree, terms)


def lie_derivative(X: KVector, a: KForm) -> KForm:
    """
    Dérivée de Lie L(X)a = d(i(X)a) − (-1)^m i(X)(da)

    Le résultat est de degré |a| − m + 1 ; hors de 0..dim c'est l'objet nul.
    Pour m = 0 (une fonction f) la formule donne df ∧ a.
    """
    _require(X, KVector, "lie_derivative")
    _require(a, KForm, "lie_derivative")
    check_same_dim(X, a)
    first = exterior_derivative(contract(X, a, strict=False), strict=False)
    second = contract(X, exterior_derivative(a, strict=False), strict=False)
    return first + second if X.degree % 2 else first - second


def directional_derivative(X: KVector, f: Polynomial) -> Polynomial:
    """X(f) = Σ_i X^i ∂_i f pour un champ de vecteurs X"""
    if X.degree != 1:
        raise DegreeError(f"champ de vecteurs attendu, degré {X.degree}")
    total = Polynomial.zero(X.dim)
    for (i,), component in X.items():
        total = total + component * f.diff(i)
    return total


def evaluate(a: GradedTensor, point: Point) -> ConstantTensor:
    """Évaluation exacte des coefficients au point donné"""
    return a.evaluate(point)


def pullback_linear(A: LinearEndo, a: KForm) -> KForm:
    """
    Tiré en arrière par φ(x) = Ax

    φ*(f dx_I) = f(Ax) ∧_{i∈I} (Σ_j A_ij dx_j), de sorte que
    pullback(AB) = pullback(B) ∘ pullback(A).
    """
    _require(a, KForm, "pullback_linear")
    dim = a.dim
    if A.size != dim:
        raise DimensionMismatchError(f"matrice {A.size}×{A.size} en dimension {dim}")
    if a.is_vacuous():
        return a

    rows = [list(row) for row in A.rows]
    covectors = [
        KForm(dim, 1, {(j,): value for j, value in enumerate(row) if value}) for row in rows
    ]
    unit = KForm.function(Polynomial.constant(dim, 1))
    result = KForm.zero(dim, a.degree)
    for index, coeff in a.items():
        frame = reduce(wedge, (covectors[i] for i in index), unit)
        result = result + frame * coeff.substitute_linear(rows)
    return result

