"""
Générateurs aléatoires reproductibles (numpy Generator avec graine)

Toutes les valeurs tirées sont converties en rationnels exacts.
"""

from fractions import Fraction

import numpy as np

from .multiindex import basis
from .polynomial import Polynomial
from .tensors import KForm, KVector, Point


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_rational(rng: np.random.Generator, bound: int = 3, max_den: int = 2) -> Fraction:
    """Rationnel p/q avec |p| ≤ bound, 1 ≤ q ≤ max_den"""
    numerator = int(rng.integers(-bound, bound + 1))
    denominator = int(rng.integers(1, max_den + 1))
    return Fraction(numerator, denominator)


def random_nonzero_rational(rng: np.random.Generator, bound: int = 3, max_den: int = 2) -> Fraction:
    value = Fraction(0)
    while value == 0:
        value = random_rational(rng, bound, max_den)
    return value


def random_polynomial(
    rng: np.random.Generator, dim: int, max_degree: int = 2, max_terms: int = 3
) -> Polynomial:
    """Polynôme creux à au plus `max_terms` monômes de degré ≤ `max_degree`"""
    terms: dict[tuple[int, ...], Fraction] = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        exponent = [0] * dim
        for _ in range(int(rng.integers(0, max_degree + 1))):
            exponent[int(rng.integers(0, dim))] += 1
        key = tuple(exponent)
        terms[key] = terms.get(key, Fraction(0)) + random_nonzero_rational(rng)
    return Polynomial(dim, terms)


def _random_terms(
    rng: np.random.Generator, dim: int, degree: int, max_poly_degree: int, max_terms: int
) -> dict[tuple[int, ...], Polynomial]:
    indices = basis(dim, degree)
    if not indices:
        return {}
    count = int(rng.integers(1, min(max_terms, len(indices)) + 1))
    chosen = rng.choice(len(indices), size=count, replace=False)
    return {
        indices[int(pos)]: random_polynomial(rng, dim, max_poly_degree)
        for pos in sorted(chosen)
    }


def random_form(
    rng: np.random.Generator, dim: int, degree: int, max_poly_degree: int = 2, max_terms: int = 3
) -> KForm:
    return KForm(dim, degree, _random_terms(rng, dim, degree, max_poly_degree, max_terms))


def random_multivector(
    rng: np.random.Generator, dim: int, degree: int, max_poly_degree: int = 2, max_terms: int = 3
) -> KVector:
    return KVector(dim, degree, _random_terms(rng, dim, degree, max_poly_degree, max_terms))


def random_constant_form(rng: np.random.Generator, dim: int, degree: int, density: float = 0.6) -> KForm:
    """Forme à coefficients constants ; chaque coefficient est non nul avec probabilité `density`"""
    terms = {
        index: random_nonzero_rational(rng)
        for index in basis(dim, degree)
        if rng.random() < density
    }
    return KForm(dim, degree, terms)


def random_point(rng: np.random.Generator, dim: int, bound: int = 5, max_den: int = 3) -> Point:
    return Point(tuple(random_rational(rng, bound, max_den) for _ in range(dim)))
