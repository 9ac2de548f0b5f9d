"""
Difféomorphismes linéaires conformes spéciaux et crochet de Poisson

Si φ*Ω = cΩ, alors φ*{ξ, ζ} = (1/c) {φ*ξ, φ*ζ} pour toutes formes
hamiltoniennes ξ, ζ.
"""

from msym_toolkit.analysis.hamiltonian import hamiltonian_field
from msym_toolkit.analysis.poisson import poisson_bracket, random_hamiltonian_pair
from msym_toolkit.analysis.structure import MultisymplecticStructure
from msym_toolkit.core.exceptions import ContractViolation, InputError
from msym_toolkit.core.validators import NumericRangeValidator
from msym_toolkit.exterior.linear import LinearEndo
from msym_toolkit.exterior.operators import pullback_linear
from msym_toolkit.exterior.tensors import KForm, KVector
from msym_toolkit.schouten.identities import GradedIdentityReport, run_identity
from msym_toolkit.utils.decorators import log_call

from .algebra import special_conformal_check


def _pulled_pair(S: MultisymplecticStructure, A: LinearEndo, form: KForm, m: int) -> tuple[KForm, KVector]:
    pulled = pullback_linear(A, form)
    field = hamiltonian_field(S, pulled, m)
    if field is None:
        raise ContractViolation("le tiré en arrière d'une forme hamiltonienne n'est pas hamiltonien")
    return pulled, field


@log_call("conformal_bracket_verified")
def verify_conformal_bracket(
    S: MultisymplecticStructure, A: LinearEndo, cases: int = 25, seed: int = 0, poly_degree: int = 2
) -> GradedIdentityReport:
    """
    Vérifie φ*{ξ, ζ} = (1/c) {φ*ξ, φ*ζ} sur des paires hamiltoniennes tirées

    Args:
        S: Structure à coefficients constants
        A: Matrice de φ, conforme spéciale pour Ω
        cases: Nombre de tirages
        seed: Graine

    Raises:
        InputError: si φ*Ω n'est pas un multiple constant de Ω
    """
    if not S.is_constant:
        raise InputError("vérification réservée aux Ω à coefficients constants")
    NumericRangeValidator(1, None, what="nombre de cas")(cases)
    valence = special_conformal_check(A, S.omega, S.omega)
    if valence is None:
        raise InputError("φ n'est pas conforme spéciale pour Ω")

    def conformal_bracket(rng):
        a = int(rng.integers(1, S.degree))
        b = int(rng.integers(1, S.degree))
        xi, X = random_hamiltonian_pair(S, a, rng, poly_degree)
        zeta, Y = random_hamiltonian_pair(S, b, rng, poly_degree)
        pulled_xi, pulled_X = _pulled_pair(S, A, xi, a)
        pulled_zeta, pulled_Y = _pulled_pair(S, A, zeta, b)
        lhs = pullback_linear(A, poisson_bracket(S, xi, zeta, X, Y))
        rhs = poisson_bracket(S, pulled_xi, pulled_zeta, pulled_X, pulled_Y) * (1 / valence)
        return lhs - rhs, {"xi": xi, "zeta": zeta}

    return run_identity("conformal_bracket", cases, seed, conformal_bracket)
