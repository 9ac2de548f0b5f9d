"""
Identités de localisation et d'homotopie

Les fonctions plateau ne sont pas polynomiales : la localisation est testée
par la règle de Leibniz L(λX)a = λL(X)a + dλ ∧ i(X)a avec λ polynomial.
"""

from msym_toolkit.core.exceptions import DegreeError
from msym_toolkit.core.validators import NumericRangeValidator
from msym_toolkit.exterior.operators import contract, exterior_derivative, lie_derivative, wedge
from msym_toolkit.exterior.polynomial import Polynomial
from msym_toolkit.exterior.sampling import random_form, random_multivector, random_polynomial
from msym_toolkit.exterior.tensors import KForm, KVector
from msym_toolkit.schouten.identities import GradedIdentityReport, run_identity
from msym_toolkit.utils.decorators import log_call

from .homotopy import homotopy_operator


def localization_residual(lam: Polynomial, X: KVector, a: KForm) -> KForm:
    """L(λX)a − λL(X)a − dλ ∧ i(X)a, nul pour tout champ de vecteurs X"""
    if X.degree != 1:
        raise DegreeError("identité de localisation pour un champ de vecteurs")
    dlam = exterior_derivative(KForm.function(lam))
    return (
        lie_derivative(X * lam, a)
        - lie_derivative(X, a) * lam
        - wedge(dlam, contract(X, a, strict=False))
    )


@log_call("localization_identities_verified")
def verify_localization_identities(
    dim: int, cases: int = 25, seed: int = 0, poly_degree: int = 2
) -> list[GradedIdentityReport]:
    """
    Identité L(λX)a = λL(X)a + dλ ∧ i(X)a et dK + Kd = id sur des tirages
    """
    NumericRangeValidator(1, None, what="dimension")(dim)
    NumericRangeValidator(1, None, what="nombre de cas")(cases)

    def localization(rng):
        lam = random_polynomial(rng, dim, poly_degree)
        X = random_multivector(rng, dim, 1, poly_degree, max_terms=2)
        a = random_form(rng, dim, int(rng.integers(0, dim + 1)), poly_degree, max_terms=2)
        return localization_residual(lam, X, a), {"lambda": KForm.function(lam), "X": X, "a": a}

    def homotopy(rng):
        a = random_form(rng, dim, int(rng.integers(1, dim + 1)), poly_degree + 1, max_terms=3)
        da = exterior_derivative(a, strict=False)
        rebuilt = exterior_derivative(homotopy_operator(a))
        if not da.is_vacuous():
            rebuilt = rebuilt + homotopy_operator(da)
        return rebuilt - a, {"a": a}

    return [
        run_identity("localization", cases, seed, localization),
        run_identity("homotopy", cases, seed + 1, homotopy),
    ]
