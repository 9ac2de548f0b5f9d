"""
Homogénéité d'Euler et champs conformes : L(X)Ω = σΩ
"""

from fractions import Fraction

from msym_toolkit.core.exceptions import DegreeError
from msym_toolkit.core.validators import check_same_dim
from msym_toolkit.exterior.operators import lie_derivative
from msym_toolkit.exterior.polynomial import Polynomial
from msym_toolkit.exterior.tensors import KForm, KVector
from msym_toolkit.monitoring.logger import get_logger
from msym_toolkit.utils.decorators import log_call

from .homotopy import euler_field
from .structure import MultisymplecticStructure

logger = get_logger(__name__)


def proportionality_factor(target: KForm, base: KForm) -> Polynomial | None:
    """
    Le polynôme σ tel que target = σ · base, s'il existe

    La division exacte est faite sur un coefficient de `base` puis vérifiée
    sur tous les autres.
    """
    check_same_dim(target, base)
    if base.is_zero() or target.degree != base.degree:
        return None
    index, pivot = base.items()[0]
    sigma = target.coefficient(index).exact_quotient(pivot)
    if sigma is None:
        return None
    return sigma if base * sigma == target else None


@log_call("euler_homogeneity_checked")
def euler_homogeneity(S: MultisymplecticStructure | KForm) -> Fraction | None:
    """
    La constante c avec L(Δ)Ω = cΩ pour le champ d'Euler global Δ

    Returns:
        c, ou None si L(Δ)Ω n'est pas un multiple constant de Ω (ou Ω = 0)
    """
    omega = S.omega if isinstance(S, MultisymplecticStructure) else S
    sigma = proportionality_factor(lie_derivative(euler_field(omega.dim), omega), omega)
    if sigma is None or not sigma.is_constant():
        return None
    return sigma.constant_value()


@log_call("conformal_checked")
def conformal_check(S: MultisymplecticStructure, X: KVector) -> Polynomial | None:
    """
    Le facteur σ avec L(X)Ω = σΩ, s'il existe

    Un σ non constant est retourné tel quel ; l'appelant le signale via
    `sigma.is_constant()`.
    """
    if not isinstance(X, KVector) or X.degree != 1:
        raise DegreeError("champ de vecteurs (degré 1) attendu")
    sigma = proportionality_factor(lie_derivative(X, S.omega), S.omega)
    if sigma is not None and not sigma.is_constant():
        logger.info("non_constant_conformal_factor", degree=sigma.total_degree())
    return sigma
