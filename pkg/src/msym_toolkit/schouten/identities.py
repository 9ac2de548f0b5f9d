"""
Vérification exacte des identités graduées du crochet de Schouten
sur des multivecteurs polynomiaux tirés avec une graine
"""

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from msym_toolkit.core.exceptions import ContractViolation
from msym_toolkit.core.validators import NumericRangeValidator
from msym_toolkit.exterior.operators import lie_derivative, wedge
from msym_toolkit.exterior.printing import format_tensor
from msym_toolkit.exterior.sampling import make_rng, random_form, random_multivector
from msym_toolkit.exterior.tensors import GradedTensor, KVector
from msym_toolkit.monitoring.logger import get_logger
from msym_toolkit.utils.decorators import log_call

from .bracket import schouten_bracket

logger = get_logger(__name__)


@dataclass(frozen=True)
class GradedIdentityReport:
    """Résultat d'une identité vérifiée sur `cases` tirages"""

    name: str
    cases: int
    passed: bool
    seed: int
    counterexample: dict[str, str] | None = field(default=None)

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ContractViolation(f"identité {self.name} en échec sans contre-exemple")

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "cases": self.cases,
            "passed": self.passed,
            "seed": self.seed,
            "counterexample": self.counterexample,
        }


def sign(exponent: int) -> int:
    """(-1)^exponent"""
    return -1 if exponent % 2 else 1


def run_identity(
    name: str,
    cases: int,
    seed: int,
    check: Callable[[np.random.Generator], tuple[GradedTensor, dict[str, GradedTensor]]],
) -> GradedIdentityReport:
    """
    Exécute `check` sur `cases` tirages et garde le premier contre-exemple

    Args:
        check: Retourne (résidu, entrées) ; l'identité tient si le résidu est nul
    """
    rng = make_rng(seed)
    for case in range(cases):
        residual, inputs = check(rng)
        if not residual.is_zero():
            counterexample = {key: format_tensor(value) for key, value in inputs.items()}
            counterexample["residual"] = format_tensor(residual)
            counterexample["case"] = str(case)
            logger.warning("identity_failed", identity=name, case=case, seed=seed)
            return GradedIdentityReport(name, case + 1, False, seed, counterexample)
    return GradedIdentityReport(name, cases, True, seed)


@log_call("graded_identities_verified")
def verify_graded_identities(
    dim: int, max_degree: int = 2, cases: int = 25, seed: int = 0, poly_degree: int = 2
) -> list[GradedIdentityReport]:
    """
    Vérifie antisymétrie, Leibniz, Jacobi et l'identité d'opérateurs

    Args:
        dim: Dimension de l'ouvert
        max_degree: Degré maximal des multivecteurs tirés
        cases: Nombre de tirages par identité
        seed: Graine (chaque identité dérive la sienne)
        poly_degree: Degré maximal des coefficients

    Returns:
        Un rapport par identité, dans un ordre fixe
    """
    NumericRangeValidator(1, None, what="dimension")(dim)
    NumericRangeValidator(0, dim, what="degré maximal")(max_degree)
    NumericRangeValidator(1, None, what="nombre de cas")(cases)

    def draw(rng: np.random.Generator, min_degree: int = 0) -> KVector:
        degree = int(rng.integers(min_degree, max_degree + 1))
        return random_multivector(rng, dim, degree, poly_degree, max_terms=2)

    def antisymmetry(rng):
        X, Y = draw(rng), draw(rng)
        p, q = X.degree, Y.degree
        residual = schouten_bracket(X, Y) + schouten_bracket(Y, X) * sign((p - 1) * (q - 1))
        return residual, {"X": X, "Y": Y}

    def leibniz(rng):
        X, Y, Z = draw(rng), draw(rng), draw(rng)
        p, q = X.degree, Y.degree
        lhs = schouten_bracket(X, wedge(Y, Z))
        rhs = wedge(schouten_bracket(X, Y), Z) + wedge(Y, schouten_bracket(X, Z)) * sign((p - 1) * q)
        return lhs - rhs, {"X": X, "Y": Y, "Z": Z}

    def jacobi(rng):
        X, Y, Z = draw(rng), draw(rng), draw(rng)
        p, q, r = X.degree, Y.degree, Z.degree
        residual = (
            schouten_bracket(X, schouten_bracket(Y, Z)) * sign((p - 1) * (r - 1))
            + schouten_bracket(Y, schouten_bracket(Z, X)) * sign((q - 1) * (p - 1))
            + schouten_bracket(Z, schouten_bracket(X, Y)) * sign((r - 1) * (q - 1))
        )
        return residual, {"X": X, "Y": Y, "Z": Z}

    def operator_identity(rng):
        X, Y = draw(rng), draw(rng)
        a = random_form(rng, dim, int(rng.integers(0, dim + 1)), poly_degree, max_terms=2)
        p, q = X.degree, Y.degree
        lhs = lie_derivative(schouten_bracket(X, Y), a)
        rhs = lie_derivative(X, lie_derivative(Y, a)) - lie_derivative(
            Y, lie_derivative(X, a)
        ) * sign((p - 1) * (q - 1))
        return lhs - rhs, {"X": X, "Y": Y, "a": a}

    def odd_self_bracket(rng):
        odd_degrees = [d for d in range(1, max_degree + 1) if d % 2]
        degree = odd_degrees[int(rng.integers(0, len(odd_degrees)))] if odd_degrees else 1
        X = random_multivector(rng, dim, degree, poly_degree, max_terms=2)
        return schouten_bracket(X, X), {"X": X}

    checks = [
        ("antisymmetry", antisymmetry),
        ("leibniz", leibniz),
        ("jacobi", jacobi),
        ("operator_identity", operator_identity),
        ("odd_self_bracket", odd_self_bracket),
    ]
    return [
        run_identity(name, cases, seed + offset, check)
        for offset, (name, check) in enumerate(checks)
    ]
