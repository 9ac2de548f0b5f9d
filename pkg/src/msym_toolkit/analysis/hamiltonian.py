"""
Champs de multivecteurs hamiltoniens : résolution de i(X)Ω = dζ

Résolution ponctuelle pour toute structure, globale (polynomiale) pour Ω à
coefficients constants.
"""

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from math import comb
from typing import Any

import numpy as np

from msym_toolkit.core.exceptions import ContractViolation, DegreeError, InputError
from msym_toolkit.core.validators import NumericRangeValidator, check_same_dim
from msym_toolkit.exterior import linalg
from msym_toolkit.exterior.multiindex import basis
from msym_toolkit.exterior.operators import contract, exterior_derivative
from msym_toolkit.exterior.polynomial import Exponent, Polynomial
from msym_toolkit.exterior.printing import format_tensor
from msym_toolkit.exterior.sampling import random_polynomial
from msym_toolkit.exterior.tensors import ConstantTensor, KForm, KVector, Point, Variance
from msym_toolkit.monitoring.logger import get_logger
from msym_toolkit.utils.decorators import log_call

from .homotopy import is_exact, primitive
from .omega_hat import constant_contraction_matrix, omega_hat
from .structure import MultisymplecticStructure

logger = get_logger(__name__)


class Classification(StrEnum):
    """Nature d'un champ de multivecteurs vis-à-vis de Ω"""

    HAMILTONIAN = "hamiltonian"
    LOCALLY_HAMILTONIAN = "locally_hamiltonian"
    NEITHER = "neither"


@dataclass(frozen=True)
class HamiltonianSolution:
    """
    Solution ponctuelle de i(X_x)Ω_x = (dζ)_x

    `particular` vaut None quand le second membre n'est pas dans l'image de
    Ω̂_m ; l'ensemble des solutions est sinon particular + vect(kernel).
    """

    point: Point
    m: int
    rhs: ConstantTensor
    particular: ConstantTensor | None
    kernel: tuple[ConstantTensor, ...]

    @property
    def solvable(self) -> bool:
        return self.particular is not None

    def to_dict(self) -> dict[str, Any]:
        return {
            "point": list(self.point.coords),
            "m": self.m,
            "rhs": format_tensor(self.rhs.to_tensor()),
            "solvable": self.solvable,
            "particular": format_tensor(self.particular.to_tensor()) if self.particular else None,
            "kernel": [format_tensor(v.to_tensor()) for v in self.kernel],
        }


def _check_hamiltonian_degrees(S: MultisymplecticStructure, zeta: KForm, m: int) -> None:
    NumericRangeValidator(1, S.degree - 1, what="m")(m)
    if not isinstance(zeta, KForm):
        raise InputError(f"forme hamiltonienne attendue, reçu {type(zeta).__name__}")
    check_same_dim(S.omega, zeta)
    if zeta.degree != S.degree - m - 1:
        raise DegreeError(f"ζ doit être de degré k − m − 1 = {S.degree - m - 1}, reçu {zeta.degree}")


@log_call("hamiltonian_solved")
def hamiltonian_solve(
    S: MultisymplecticStructure, zeta: KForm, m: int, point: Point
) -> HamiltonianSolution:
    """
    Résout Ω̂_m(p)·X = (dζ)_p exactement

    Args:
        S: Structure multisymplectique
        zeta: Forme de degré k − m − 1
        m: Degré du multivecteur cherché
        point: Point de résolution

    Returns:
        HamiltonianSolution (non résoluble signalé par `particular=None`)
    """
    _check_hamiltonian_degrees(S, zeta, m)
    rhs = exterior_derivative(zeta).evaluate(point)
    hat = omega_hat(S, m, point)
    solution = linalg.solve([list(row) for row in hat.matrix], rhs.to_vector(), comb(S.dim, m))
    if solution is None:
        logger.info("hamiltonian_unsolvable", m=m, point=[str(c) for c in point.coords])
        return HamiltonianSolution(point, m, rhs, None, hat.kernel)

    particular = ConstantTensor.from_vector(S.dim, m, Variance.VECTOR, solution)
    omega_x = S.omega.evaluate(point).to_tensor()
    if contract(particular.to_tensor(), omega_x).evaluate(point) != rhs:
        raise ContractViolation("la solution particulière ne reproduit pas dζ")
    return HamiltonianSolution(point, m, rhs, particular, hat.kernel)


def _monomial_components(form: KForm) -> dict[Exponent, list[Fraction]]:
    """Regroupe les coefficients par monôme : x^α ↦ vecteur dans basis(n, k)"""
    positions = {index: pos for pos, index in enumerate(basis(form.dim, form.degree))}
    size = len(positions)
    grouped: dict[Exponent, list[Fraction]] = {}
    for index, coeff in form.items():
        for mono, value in coeff.items():
            grouped.setdefault(mono, [Fraction(0)] * size)[positions[index]] = value
    return grouped


def hamiltonian_field(
    S: MultisymplecticStructure,
    zeta: KForm,
    m: int,
    rng: np.random.Generator | None = None,
    kernel_degree: int = 1,
) -> KVector | None:
    """
    Champ X polynomial global avec i(X)Ω = dζ, pour Ω à coefficients constants

    Le système constant Ω̂_m est résolu monôme par monôme de dζ. Avec `rng`,
    des multiples polynomiaux aléatoires des vecteurs du noyau sont ajoutés.

    Returns:
        Le champ X, ou None si un monôme de dζ sort de l'image de Ω̂_m
    """
    if not S.is_constant:
        raise InputError("résolution globale réservée aux Ω à coefficients constants")
    _check_hamiltonian_degrees(S, zeta, m)
    dim = S.dim
    omega_0 = S.omega
    matrix = constant_contraction_matrix(omega_0, m)
    ncols = comb(dim, m)
    indices = basis(dim, m)

    terms: dict[tuple[int, ...], Polynomial] = {}
    for mono, rhs in _monomial_components(exterior_derivative(zeta)).items():
        solution = linalg.solve(matrix, rhs, ncols)
        if solution is None:
            return None
        for index, value in zip(indices, solution, strict=True):
            if value:
                term = Polynomial.monomial(mono, value)
                terms[index] = terms[index] + term if index in terms else term

    field = KVector(dim, m, terms)
    if rng is not None:
        for vector in linalg.nullspace(matrix, ncols):
            weight = random_polynomial(rng, dim, kernel_degree, max_terms=2)
            kernel_field = ConstantTensor.from_vector(dim, m, Variance.VECTOR, vector).to_tensor()
            field = field + kernel_field * weight

    if contract(field, omega_0) != exterior_derivative(zeta):
        raise ContractViolation("i(X)Ω ≠ dζ pour le champ construit")
    return field


def hamiltonian_form(S: MultisymplecticStructure, X: KVector) -> KForm | None:
    """Une forme ζ avec i(X)Ω = dζ, ou None si X n'est pas hamiltonien"""
    return primitive(contract(X, S.omega, strict=False))


@log_call("multivector_classified")
def classify_multivector(S: MultisymplecticStructure, X: KVector) -> Classification:
    """
    Classe X : localement hamiltonien ⇔ d(i(X)Ω) = 0 ; hamiltonien si de
    plus i(X)Ω est exacte (décidé par l'opérateur d'homotopie)

    Raises:
        DegreeError: X de degré ≥ k
    """
    if not isinstance(X, KVector):
        raise InputError(f"multivecteur attendu, reçu {type(X).__name__}")
    check_same_dim(S.omega, X)
    NumericRangeValidator(1, None, what="degré de X")(X.degree)
    if X.degree >= S.degree:
        raise DegreeError(
            f"champ de degré {X.degree} pour une {S.degree}-forme : degré 1..{S.degree - 1} attendu"
        )

    contraction = contract(X, S.omega, strict=False)
    if not exterior_derivative(contraction, strict=False).is_zero():
        return Classification.NEITHER
    if is_exact(contraction):
        return Classification.HAMILTONIAN
    return Classification.LOCALLY_HAMILTONIAN
