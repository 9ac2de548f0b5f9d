"""
Algèbres de stabilisateurs linéaires des formes à coefficients constants

Pour ω0 constante, L(X_A)ω0 est l'action standard de gl(n) sur Λ^k :
on résout {A : L(X_A)ω0 = c ω0} par élimination exacte sur n² inconnues.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from msym_toolkit.core.exceptions import ContractViolation, DimensionMismatchError, InputError
from msym_toolkit.core.validators import NumericRangeValidator, check_same_dim
from msym_toolkit.exterior import linalg
from msym_toolkit.exterior.linear import LinearEndo
from msym_toolkit.exterior.multiindex import basis
from msym_toolkit.exterior.operators import lie_derivative, pullback_linear
from msym_toolkit.exterior.printing import format_tensor
from msym_toolkit.exterior.tensors import ConstantTensor, KForm, Point, Variance
from msym_toolkit.monitoring.logger import get_logger
from msym_toolkit.utils.decorators import log_call
from msym_toolkit.utils.helpers import format_rational

logger = get_logger(__name__)

ConstantForm = KForm | ConstantTensor


def as_constant_form(omega: ConstantForm) -> KForm:
    """Normalise une forme constante (KForm ou ConstantTensor) en KForm"""
    if isinstance(omega, ConstantTensor):
        if omega.variance is not Variance.FORM:
            raise InputError("forme attendue, reçu un multivecteur constant")
        return omega.to_tensor()
    if not isinstance(omega, KForm):
        raise InputError(f"forme attendue, reçu {type(omega).__name__}")
    if not omega.is_constant():
        raise InputError("forme à coefficients constants attendue")
    return omega


def _action_vector(A: LinearEndo, omega: KForm) -> list[Fraction]:
    # L(X_A)ω est constante quand ω l'est
    origin = Point((0,) * omega.dim)
    return lie_derivative(A.as_vector_field(), omega).evaluate(origin).to_vector()


@dataclass(frozen=True)
class StabilizerResult:
    """
    Base échelonnée réduite de l'algèbre, avec le poids conforme c_A de
    chaque élément (nul hors du cas conforme)
    """

    omega: KForm
    basis: tuple[LinearEndo, ...]
    conformal: bool
    weights: tuple[Fraction, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_dict(self) -> dict[str, Any]:
        return {
            "form": format_tensor(self.omega),
            "conformal": self.conformal,
            "dimension": self.dimension,
            "basis": [[[format_rational(v) for v in row] for row in A.rows] for A in self.basis],
            "weights": [format_rational(c) for c in self.weights],
        }


def _solve_stabilizer(omega: KForm, conformal: bool) -> StabilizerResult:
    n = omega.dim
    size = n * n
    columns = [
        _action_vector(LinearEndo.elementary(n, i, j), omega) for i in range(n) for j in range(n)
    ]
    if conformal:
        columns.append([-v for v in omega.evaluate(Point((0,) * n)).to_vector()])
    ncols = len(columns)
    matrix = linalg.transpose(columns, len(basis(n, omega.degree)))
    generators = linalg.row_basis(linalg.nullspace(matrix, ncols), ncols)

    elements = []
    weights = []
    for vector in generators:
        A = LinearEndo.from_flat(n, vector[:size])
        c = vector[size] if conformal else Fraction(0)
        if lie_derivative(A.as_vector_field(), omega) != omega * c:
            raise ContractViolation(f"L(X_A)ω ≠ {format_rational(c)}ω pour un élément de base")
        elements.append(A)
        weights.append(c)
    logger.info(
        "stabilizer_solved", dim=n, degree=omega.degree, conformal=conformal, dimension=len(elements)
    )
    return StabilizerResult(omega, tuple(elements), conformal, tuple(weights))


@log_call("stabilizer_algebra_computed")
def stabilizer_algebra(omega0: ConstantForm) -> StabilizerResult:
    """
    {A ∈ gl(n) : L(X_A)ω0 = 0}

    Exemples : volume sur R^n → n² − 1, symplectique sur R^4 → 10, G2 → 14.
    """
    return _solve_stabilizer(as_constant_form(omega0), conformal=False)


@log_call("conformal_stabilizer_computed")
def conformal_stabilizer(omega0: ConstantForm) -> StabilizerResult:
    """
    {(A, c) : L(X_A)ω0 = c ω0} ; l'identité y figure avec le poids k

    Raises:
        InputError: si ω0 est nulle
    """
    omega = as_constant_form(omega0)
    if omega.is_zero():
        raise InputError("stabilisateur conforme d'une forme nulle")
    return _solve_stabilizer(omega, conformal=True)


@dataclass(frozen=True)
class InvariantForms:
    degree: int
    basis: tuple[KForm, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_dict(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "dimension": self.dimension,
            "basis": [format_tensor(form) for form in self.basis],
        }


@log_call("invariant_forms_computed")
def invariant_forms(stab: StabilizerResult, degree: int) -> InvariantForms:
    """
    Formes constantes α de degré d avec L(X_A)α = 0 pour tout A de la base

    Args:
        stab: Algèbre non vide
        degree: Degré d, 0 ≤ d ≤ n
    """
    if not stab.basis:
        raise InputError("algèbre de stabilisateur vide")
    n = stab.omega.dim
    NumericRangeValidator(0, n, what="degré des formes invariantes")(degree)
    indices = basis(n, degree)
    rows: list[list[Fraction]] = []
    for A in stab.basis:
        columns = [_action_vector(A, KForm.basis_element(n, index)) for index in indices]
        rows.extend(linalg.transpose(columns, len(indices)))
    generators = linalg.row_basis(linalg.nullspace(rows, len(indices)), len(indices))
    forms = tuple(
        ConstantTensor.from_vector(n, degree, Variance.FORM, vector).to_tensor()
        for vector in generators
    )
    return InvariantForms(degree, forms)


@dataclass(frozen=True)
class ClosureReport:
    pairs: int
    closed: bool
    counterexample: tuple[int, int] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "pairs": self.pairs,
            "closed": self.closed,
            "counterexample": list(self.counterexample) if self.counterexample else None,
        }


def commutator_closure(stab: StabilizerResult) -> ClosureReport:
    """Vérifie exactement que AB − BA reste dans l'algèbre pour toute paire de la base"""
    flat = [A.flatten() for A in stab.basis]
    ncols = stab.omega.dim ** 2
    pairs = 0
    for i, A in enumerate(stab.basis):
        for j in range(i + 1, len(stab.basis)):
            pairs += 1
            bracket = A.commutator(stab.basis[j]).flatten()
            if linalg.rank(flat + [bracket], ncols) != stab.dimension:
                logger.warning("commutator_outside_algebra", left=i, right=j)
                return ClosureReport(pairs, False, (i, j))
    return ClosureReport(pairs, True)


def special_conformal_check(A: LinearEndo, omega1: ConstantForm, omega2: ConstantForm) -> Fraction | None:
    """
    La valence c avec φ*ω2 = c ω1 pour φ(x) = Ax

    Returns:
        c ≠ 0, ou None si φ*ω2 n'est pas un multiple constant non nul de ω1
        (en particulier si ω1 = 0 ou ω2 = 0)

    Raises:
        InputError: si A est singulière
    """
    first = as_constant_form(omega1)
    second = as_constant_form(omega2)
    dim = check_same_dim(first, second)
    if A.size != dim:
        raise DimensionMismatchError(f"matrice {A.size}×{A.size} en dimension {dim}")
    if not A.is_invertible():
        raise InputError("matrice singulière : φ n'est pas un difféomorphisme")
    if first.degree != second.degree or first.is_zero() or second.is_zero():
        return None

    pulled = pullback_linear(A, second)
    index, coeff = first.items()[0]
    c = pulled.coefficient(index).constant_value() / coeff.constant_value()
    return c if pulled == first * c else None
