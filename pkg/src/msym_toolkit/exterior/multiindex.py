"""
Combinatoire des multi-indices strictement croissants

Les indices sont 0-based en interne ; l'affichage (x1, dx1, e1) est 1-based.
Un multi-index I = (i_1 < ... < i_k) représente dx_{i_1}∧...∧dx_{i_k}
(ou ∂_{i_1}∧...∧∂_{i_k} pour les multivecteurs).
"""

from functools import lru_cache
from itertools import combinations

MultiIndex = tuple[int, ...]


@lru_cache(maxsize=None)
def basis(dim: int, degree: int) -> tuple[MultiIndex, ...]:
    """
    Base lexicographique des multi-indices de longueur `degree`

    Returns:
        Tuple des C(dim, degree) multi-indices, vide hors de 0..dim
    """
    if degree < 0 or degree > dim:
        return ()
    return tuple(combinations(range(dim), degree))


@lru_cache(maxsize=None)
def basis_position(dim: int, degree: int) -> dict[MultiIndex, int]:
    """Position de chaque multi-index dans `basis(dim, degree)`"""
    return {index: pos for pos, index in enumerate(basis(dim, degree))}


def sort_with_sign(seq: tuple[int, ...]) -> tuple[MultiIndex | None, int]:
    """
    Trie une suite d'indices en comptant la parité de la permutation

    Returns:
        (multi-index trié, signe) ; (None, 0) si un indice est répété
    """
    if len(set(seq)) != len(seq):
        return None, 0
    inversions = sum(1 for a, b in combinations(seq, 2) if a > b)
    return tuple(sorted(seq)), -1 if inversions % 2 else 1


def merge(left: MultiIndex, right: MultiIndex) -> tuple[MultiIndex | None, int]:
    """
    Concaténation normalisée : dx_I ∧ dx_J = signe · dx_K

    Returns:
        (K, signe) ou (None, 0) si I et J se recouvrent
    """
    if set(left) & set(right):
        return None, 0
    # Chaque couple (i ∈ I, j ∈ J) avec i > j est une transposition
    inversions = sum(1 for i in left for j in right if i > j)
    return tuple(sorted(left + right)), -1 if inversions % 2 else 1


def remove(index: MultiIndex, j: int) -> tuple[MultiIndex | None, int]:
    """
    Contraction élémentaire i(∂_j) dx_I = (-1)^s dx_{I∖j}, s position de j dans I

    Returns:
        (I∖j, signe) ou (None, 0) si j ∉ I
    """
    try:
        s = index.index(j)
    except ValueError:
        return None, 0
    return index[:s] + index[s + 1 :], -1 if s % 2 else 1


def insert(index: MultiIndex, j: int) -> tuple[MultiIndex | None, int]:
    """dx_j ∧ dx_I = signe · dx_{I∪j}"""
    return merge((j,), index)


def contract_index(vector: MultiIndex, form: MultiIndex) -> tuple[MultiIndex | None, int]:
    """
    i(∂_J) dx_I avec i(∂_{j_1}∧...∧∂_{j_m}) = i(∂_{j_1})∘...∘i(∂_{j_m})

    i(∂_{j_m}) est appliqué en premier, i(∂_{j_1}) en dernier.

    Returns:
        (I∖J, signe) ou (None, 0) si J ⊄ I
    """
    current = form
    sign = 1
    for j in reversed(vector):
        current, s = remove(current, j)
        if current is None:
            return None, 0
        sign *= s
    return current, sign

