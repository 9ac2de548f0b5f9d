"""
Algèbre linéaire exacte sur Q

Les matrices sont des listes de lignes de Fraction ; l'élimination est
déléguée à `DomainMatrix` de sympy sur le corps QQ.
"""

from collections.abc import Sequence
from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from msym_toolkit.core.exceptions import DimensionMismatchError

Matrix = list[list[Fraction]]


def _to_qq(value) -> object:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _from_qq(value) -> Fraction:
    rational = QQ.to_sympy(value)
    return Fraction(int(rational.p), int(rational.q))


def to_domain_matrix(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    """Convertit une liste de lignes en DomainMatrix sur QQ"""
    if any(len(row) != ncols for row in rows):
        raise DimensionMismatchError(f"lignes de longueur ≠ {ncols}")
    elements = [[_to_qq(v) for v in row] for row in rows]
    return DomainMatrix(elements, (len(rows), ncols), QQ)


def from_domain_matrix(matrix: DomainMatrix) -> Matrix:
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        return [[] for _ in range(nrows)]
    return [[_from_qq(v) for v in row] for row in matrix.to_list()]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[Matrix, tuple[int, ...]]:
    """
    Forme échelonnée réduite

    Args:
        rows: Lignes de la matrice
        ncols: Nombre de colonnes (nécessaire si `rows` est vide)

    Returns:
        (lignes réduites, colonnes pivots)
    """
    if not rows or ncols == 0:
        return [list(map(Fraction, row)) for row in rows], ()
    reduced, pivots = to_domain_matrix(rows, ncols).rref()
    return from_domain_matrix(reduced), tuple(pivots)


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """
    Base du noyau, une variable libre à 1 par vecteur

    Returns:
        Liste de vecteurs de longueur `ncols`, ordonnés par variable libre
    """
    reduced, pivots = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis: Matrix = []
    for f in free:
        vector = [Fraction(0)] * ncols
        vector[f] = Fraction(1)
        for row_idx, pivot in enumerate(pivots):
            vector[pivot] = -reduced[row_idx][f]
        basis.append(vector)
    return basis


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], ncols: int) -> list[Fraction] | None:
    """
    Solution particulière de M·x = rhs (variables libres à 0)

    Returns:
        Le vecteur x, ou None si le système est incompatible
    """
    if len(rhs) != len(rows):
        raise DimensionMismatchError(f"second membre de taille {len(rhs)} pour {len(rows)} lignes")
    if not rows:
        return [Fraction(0)] * ncols
    augmented = [list(row) + [Fraction(value)] for row, value in zip(rows, rhs, strict=True)]
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    solution = [Fraction(0)] * ncols
    for row_idx, pivot in enumerate(pivots):
        solution[pivot] = reduced[row_idx][ncols]
    return solution


def row_basis(vectors: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Base échelonnée réduite de l'espace engendré"""
    reduced, pivots = rref(vectors, ncols)
    return reduced[: len(pivots)]


def in_span(vectors: Sequence[Sequence[Fraction]], candidate: Sequence[Fraction], ncols: int) -> bool:
    """Appartenance exacte de `candidate` à l'espace engendré par `vectors`"""
    return rank(list(vectors) + [list(candidate)], ncols) == rank(vectors, ncols)


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    size = len(rows)
    if size == 0:
        return Fraction(1)
    return _from_qq(to_domain_matrix(rows, size).det())


def transpose(rows: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    return [[row[j] for row in rows] for j in range(ncols)]
