"""
Affichage des polynômes et tenseurs dans la grammaire du parseur

Le texte produit se relit à l'identique : parse_form(format_tensor(t), t.dim, t.variance) == t.
Un tenseur de degré 0 s'écrit comme son polynôme ; seule la variance passée
au parseur distingue alors une fonction-forme d'une fonction-multivecteur.
"""

from fractions import Fraction

from msym_toolkit.utils.helpers import format_rational

from .polynomial import Exponent, Polynomial
from .tensors import GradedTensor


def _monomial(mono: Exponent) -> str:
    return "*".join(f"x{i + 1}" for i, power in enumerate(mono) for _ in range(power))


def _unsigned_term(mono: Exponent, magnitude: Fraction) -> str:
    factors = _monomial(mono)
    if not factors:
        return format_rational(magnitude)
    if magnitude == 1:
        return factors
    return f"{format_rational(magnitude)}*{factors}"


def _join(signed_terms: list[tuple[bool, str]]) -> str:
    if not signed_terms:
        return "0"
    first_negative, first = signed_terms[0]
    parts = [f"-{first}" if first_negative else first]
    for negative, text in signed_terms[1:]:
        parts.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(parts)


def format_polynomial(poly: Polynomial) -> str:
    """x1*x1*x2 - 1/2*x3 + 4"""
    return _join([(coeff < 0, _unsigned_term(mono, abs(coeff))) for mono, coeff in poly.items()])


def _basis_word(tensor: GradedTensor, index: tuple[int, ...]) -> str:
    return "^".join(f"{tensor.symbol}{i + 1}" for i in index)


def format_tensor(tensor: GradedTensor) -> str:
    """
    Affiche une forme (dx1^dx2) ou un multivecteur (e1^e2)

    Le tenseur nul de degré d ≥ 1 s'écrit 0*dx1^...^dxd pour garder son degré.
    """
    if tensor.degree == 0:
        return format_polynomial(tensor.coefficient(()))
    if tensor.is_zero():
        if tensor.degree < 0:
            return "0"
        padded = tuple(min(i, tensor.dim - 1) for i in range(tensor.degree))
        return f"0*{_basis_word(tensor, padded)}"

    signed_terms: list[tuple[bool, str]] = []
    for index, coeff in tensor.items():
        word = _basis_word(tensor, index)
        terms = coeff.items()
        if len(terms) == 1:
            ((mono, value),) = terms
            if sum(mono) == 0 and abs(value) == 1:
                text = word
            else:
                text = f"{_unsigned_term(mono, abs(value))}*{word}"
            signed_terms.append((value < 0, text))
        else:
            signed_terms.append((False, f"({format_polynomial(coeff)})*{word}"))
    return _join(signed_terms)
