"""
Crochet de Poisson gradué des formes hamiltoniennes

{ξ, ζ} = i(Y_ζ) i(X_ξ) Ω = i(Y_ζ) dξ = (-1)^(|X_ξ||Y_ζ|) i(X_ξ) dζ

Propriétés vérifiées (convention du crochet de Schouten de ce paquet) :
    - i([X, Y])Ω = (-1)^(p-1) d(i(X) i(Y) Ω) pour X, Y localement hamiltoniens ;
    - i([X_ξ, Y_ζ])Ω = (-1)^(|X_ξ|-1) d{ζ, ξ} ;
    - {ξ, ζ} = (-1)^(|X_ξ||Y_ζ|) {ζ, ξ} exactement ;
    - Jacobi modulo les formes fermées.
"""

import numpy as np

from msym_toolkit.core.exceptions import ContractViolation, DegreeError, InputError
from msym_toolkit.core.validators import NumericRangeValidator
from msym_toolkit.exterior.operators import contract, exterior_derivative
from msym_toolkit.exterior.sampling import random_form, random_multivector
from msym_toolkit.exterior.tensors import KForm, KVector
from msym_toolkit.monitoring.logger import get_logger
from msym_toolkit.schouten.bracket import schouten_bracket
from msym_toolkit.schouten.identities import GradedIdentityReport, run_identity, sign
from msym_toolkit.utils.decorators import log_call

from .hamiltonian import hamiltonian_field
from .homotopy import homotopy_operator, is_exact
from .structure import MultisymplecticStructure

logger = get_logger(__name__)


def _check_pair(S: MultisymplecticStructure, form: KForm, field: KVector, label: str) -> None:
    expected = S.degree - form.degree - 1
    if field.degree != expected:
        raise DegreeError(
            f"{label}: champ de degré {field.degree}, attendu k − |forme| − 1 = {expected}"
        )
    if contract(field, S.omega, strict=False) != exterior_derivative(form, strict=False):
        raise ContractViolation(f"{label}: i(X)Ω ≠ d(forme), paire hamiltonienne incohérente")


def poisson_bracket(
    S: MultisymplecticStructure, xi: KForm, zeta: KForm, X_xi: KVector, Y_zeta: KVector
) -> KForm:
    """
    Crochet {ξ, ζ} de degré |ξ| + |ζ| − k + 2

    Args:
        S: Structure multisymplectique
        xi, zeta: Formes hamiltoniennes
        X_xi, Y_zeta: Champs hamiltoniens avec i(X_xi)Ω = dξ et i(Y_zeta)Ω = dζ

    Raises:
        ContractViolation: paire incohérente ou expressions de la définition en désaccord
    """
    for item in (xi, zeta):
        if not isinstance(item, KForm):
            raise InputError(f"forme attendue, reçu {type(item).__name__}")
    _check_pair(S, xi, X_xi, "ξ")
    _check_pair(S, zeta, Y_zeta, "ζ")

    bracket = contract(Y_zeta, exterior_derivative(xi, strict=False), strict=False)
    nested = contract(Y_zeta, contract(X_xi, S.omega, strict=False), strict=False)
    swapped = contract(X_xi, exterior_derivative(zeta, strict=False), strict=False) * sign(
        X_xi.degree * Y_zeta.degree
    )
    if not (bracket == nested == swapped):
        raise ContractViolation("les trois expressions du crochet de Poisson diffèrent")
    return bracket


def random_hamiltonian_pair(
    S: MultisymplecticStructure, m: int, rng: np.random.Generator, poly_degree: int = 2
) -> tuple[KForm, KVector]:
    """
    Tire (ζ, X) avec i(X)Ω = dζ et |X| = m, Ω à coefficients constants

    Quand dζ sort de l'image de Ω̂_m, X est pris constant non nul et
    ζ = K(i(X)Ω) ; les coefficients constants tirés peuvent s'annuler, X est
    alors retiré.
    """
    for _ in range(4):
        zeta = random_form(rng, S.dim, S.degree - m - 1, poly_degree, max_terms=2)
        field = hamiltonian_field(S, zeta, m, rng=rng)
        if field is not None:
            return zeta, field
    while True:
        field = random_multivector(rng, S.dim, m, max_poly_degree=0, max_terms=3)
        if not field.is_zero():
            return homotopy_operator(contract(field, S.omega)), field


def closed_modulo_exact(form: KForm) -> bool:
    """Vrai si la forme est fermée ; en degré ≥ 1 l'exactitude est certifiée par K"""
    if not exterior_derivative(form, strict=False).is_zero():
        return False
    return form.degree <= 0 or form.is_vacuous() or is_exact(form)


@log_call("bracket_theorems_verified")
def verify_bracket_theorems(
    S: MultisymplecticStructure, cases: int = 25, seed: int = 0, poly_degree: int = 2
) -> list[GradedIdentityReport]:
    """
    Vérifie sur des paires hamiltoniennes tirées :
    crochet de Schouten hamiltonien, champ du crochet de Poisson,
    antisymétrie graduée et Jacobi du crochet de Poisson

    Args:
        S: Structure à coefficients constants
        cases: Nombre de tirages par propriété
        seed: Graine
        poly_degree: Degré maximal des formes tirées
    """
    if not S.is_constant:
        raise InputError("suite réservée aux Ω à coefficients constants")
    NumericRangeValidator(1, None, what="nombre de cas")(cases)
    k = S.degree

    def draw(rng):
        m = int(rng.integers(1, k))
        return random_hamiltonian_pair(S, m, rng, poly_degree)

    def hamiltonian_bracket(rng):
        _, X = draw(rng)
        _, Y = draw(rng)
        lhs = contract(schouten_bracket(X, Y), S.omega, strict=False)
        inner = contract(X, contract(Y, S.omega, strict=False), strict=False)
        rhs = exterior_derivative(inner, strict=False) * sign(X.degree - 1)
        return lhs - rhs, {"X": X, "Y": Y}

    def poisson_field(rng):
        xi, X = draw(rng)
        zeta, Y = draw(rng)
        lhs = contract(schouten_bracket(X, Y), S.omega, strict=False)
        rhs = exterior_derivative(poisson_bracket(S, zeta, xi, Y, X), strict=False) * sign(
            X.degree - 1
        )
        return lhs - rhs, {"xi": xi, "zeta": zeta, "X_xi": X, "Y_zeta": Y}

    def poisson_antisymmetry(rng):
        xi, X = draw(rng)
        zeta, Y = draw(rng)
        residual = poisson_bracket(S, xi, zeta, X, Y) - poisson_bracket(
            S, zeta, xi, Y, X
        ) * sign(X.degree * Y.degree)
        return residual, {"xi": xi, "zeta": zeta}

    def poisson_jacobi(rng):
        alpha, A = draw(rng)
        beta, B = draw(rng)
        gamma, C = draw(rng)
        a, b, c = A.degree, B.degree, C.degree

        def outer(u: KForm, U: KVector, v: KForm, V: KVector, W: KVector) -> KForm:
            # {{u, v}, w} = i(X_w) d{u, v}
            inner = poisson_bracket(S, u, v, U, V)
            return contract(W, exterior_derivative(inner, strict=False), strict=False)

        residual = (
            outer(beta, B, alpha, A, C) * (-sign((a - 1) * b + c * (a + b - 1)))
            - outer(gamma, C, alpha, A, B)
            + outer(gamma, C, beta, B, A) * sign((a + 1) * (b - 1))
        )
        if closed_modulo_exact(residual):
            residual = KForm.zero(S.dim, residual.degree)
        return residual, {"alpha": alpha, "beta": beta, "gamma": gamma}

    checks = [
        ("hamiltonian_schouten_bracket", hamiltonian_bracket),
        ("poisson_hamiltonian_field", poisson_field),
        ("poisson_antisymmetry", poisson_antisymmetry),
        ("poisson_jacobi", poisson_jacobi),
    ]
    reports = [
        run_identity(name, cases, seed + offset, check)
        for offset, (name, check) in enumerate(checks)
    ]
    logger.debug("bracket_theorems_summary", passed=[r.passed for r in reports])
    return reports

