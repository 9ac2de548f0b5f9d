"""
Module analysis - Couche multisymplectique : Ω̂_m, non-dégénérescence,
champs hamiltoniens, crochet de Poisson, homotopie et homogénéité
"""

from .hamiltonian import (
    Classification,
    HamiltonianSolution,
    classify_multivector,
    hamiltonian_field,
    hamiltonian_form,
    hamiltonian_solve,
)
from .homogeneity import conformal_check, euler_homogeneity, proportionality_factor
from .homotopy import euler_field, homotopy_operator, is_exact, primitive
from .localization import localization_residual, verify_localization_identities
from .omega_hat import (
    NondegeneracyReport,
    OmegaHatMatrix,
    default_sample_points,
    kernel_floor,
    nondegeneracy_report,
    omega_hat,
)
from .poisson import poisson_bracket, random_hamiltonian_pair, verify_bracket_theorems
from .span import SpanReport, span_check
from .structure import MultisymplecticStructure

__all__ = [
    # Structure
    "MultisymplecticStructure",
    # Contraction et non-dégénérescence
    "OmegaHatMatrix",
    "NondegeneracyReport",
    "omega_hat",
    "nondegeneracy_report",
    "kernel_floor",
    "default_sample_points",
    # Hamiltonien
    "Classification",
    "HamiltonianSolution",
    "hamiltonian_solve",
    "hamiltonian_field",
    "hamiltonian_form",
    "classify_multivector",
    # Crochet de Poisson
    "poisson_bracket",
    "random_hamiltonian_pair",
    "verify_bracket_theorems",
    # Homotopie, homogénéité, localisation
    "euler_field",
    "homotopy_operator",
    "is_exact",
    "primitive",
    "euler_homogeneity",
    "conformal_check",
    "proportionality_factor",
    "localization_residual",
    "verify_localization_identities",
    # Engendrement
    "SpanReport",
    "span_check",
]
