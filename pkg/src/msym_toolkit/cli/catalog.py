"""
Catalogue des structures multisymplectiques nommées

symplectic(m), volume(n), multicotangent(q, k) et g2, avec leurs
propriétés de non-dégénérescence documentées.
"""

import re
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any

from msym_toolkit.analysis.structure import MultisymplecticStructure
from msym_toolkit.core.exceptions import CatalogError
from msym_toolkit.exterior.multiindex import basis
from msym_toolkit.exterior.operators import exterior_derivative
from msym_toolkit.exterior.polynomial import Polynomial
from msym_toolkit.exterior.printing import format_tensor
from msym_toolkit.exterior.tensors import KForm

# Termes de la 3-forme G2 sur R^7, indices 1-based
G2_TERMS: tuple[tuple[int, tuple[int, int, int]], ...] = (
    (1, (1, 2, 3)),
    (1, (1, 4, 5)),
    (1, (1, 6, 7)),
    (1, (2, 4, 6)),
    (-1, (2, 5, 7)),
    (-1, (3, 4, 7)),
    (-1, (3, 5, 6)),
)

_NAME_PATTERN = re.compile(r"^\s*([a-z0-9_]+)\s*(?:\(([^)]*)\))?\s*$")


@dataclass(frozen=True)
class CatalogEntry:
    """Structure du catalogue et drapeaux documentés"""

    name: str
    params: tuple[int, ...]
    omega: KForm
    provenance: str
    multisymplectic: bool = True
    strongly_nondegenerate: bool | None = None

    @property
    def dim(self) -> int:
        return self.omega.dim

    @property
    def degree(self) -> int:
        return self.omega.degree

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({', '.join(str(p) for p in self.params)})"

    def structure(self) -> MultisymplecticStructure:
        return MultisymplecticStructure(self.omega)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.label,
            "dim": self.dim,
            "degree": self.degree,
            "form": format_tensor(self.omega),
            "provenance": self.provenance,
        }


def _expect(params: Sequence[int], count: int, name: str) -> None:
    if len(params) != count:
        raise CatalogError(f"{name} attend {count} paramètre(s), reçu {len(params)}")


def symplectic(m: int) -> CatalogEntry:
    """dx1∧dx2 + ... + dx(2m−1)∧dx(2m) sur R^(2m)"""
    if m < 1:
        raise CatalogError(f"symplectic(m) demande m ≥ 1, reçu {m}")
    omega = KForm(2 * m, 2, {(2 * i, 2 * i + 1): 1 for i in range(m)})
    return CatalogEntry(
        "symplectic", (m,), omega, "forme symplectique standard", strongly_nondegenerate=True
    )


def volume(n: int) -> CatalogEntry:
    """dx1∧...∧dxn"""
    if n < 2:
        raise CatalogError(f"volume(n) demande n ≥ 2, reçu {n}")
    omega = KForm(n, n, {tuple(range(n)): 1})
    return CatalogEntry("volume", (n,), omega, "forme volume", strongly_nondegenerate=True)


def multicotangent_coordinates(q: int, k: int) -> dict[tuple[int, ...], int]:
    """Position (0-based) de chaque moment p_I : x1..xq puis les p_I lexicographiques"""
    return {index: q + pos for pos, index in enumerate(basis(q, k))}


def multicotangent(q: int, k: int) -> CatalogEntry:
    """
    Ω = −dΘ avec Θ = Σ_I p_I dx_I sur le fibré Λ^k(T*R^q)

    Dimension q + C(q, k), degré k + 1.
    """
    if q < 1 or not 1 <= k <= q:
        raise CatalogError(f"multicotangent(q, k) demande 1 ≤ k ≤ q, reçu ({q}, {k})")
    momenta = multicotangent_coordinates(q, k)
    dim = q + len(momenta)
    theta = KForm(
        dim, k, {index: Polynomial.variable(dim, position) for index, position in momenta.items()}
    )
    omega = -exterior_derivative(theta)
    return CatalogEntry(
        "multicotangent",
        (q, k),
        omega,
        "forme canonique du fibré multicotangent",
        strongly_nondegenerate=True if k in (1, q) else None,
    )


def g2() -> CatalogEntry:
    """La 3-forme G2 à sept termes sur R^7"""
    omega = KForm(7, 3, {tuple(i - 1 for i in index): sign for sign, index in G2_TERMS})
    return CatalogEntry("g2", (), omega, "3-forme de stabilisateur G2", strongly_nondegenerate=True)


CATALOG: dict[str, tuple[int, Callable[..., CatalogEntry]]] = {
    "symplectic": (1, symplectic),
    "volume": (1, volume),
    "multicotangent": (2, multicotangent),
    "g2": (0, g2),
}


def parse_catalog_name(text: str) -> tuple[str, tuple[int, ...]]:
    """Ex. : "symplectic(2)" → ("symplectic", (2,))"""
    match = _NAME_PATTERN.match(text)
    if match is None:
        raise CatalogError(f"nom de catalogue invalide: {text!r}")
    name, raw = match.group(1), match.group(2)
    if not raw or not raw.strip():
        return name, ()
    try:
        return name, tuple(int(part) for part in raw.split(","))
    except ValueError as exc:
        raise CatalogError(f"paramètres non entiers dans {text!r}") from exc


def catalog_get(name: str, params: Sequence[int] = ()) -> CatalogEntry:
    """
    Structure du catalogue

    Args:
        name: symplectic, volume, multicotangent ou g2
        params: Paramètres entiers, dans l'ordre de la signature

    Raises:
        CatalogError: nom inconnu ou paramètres invalides
    """
    if name not in CATALOG:
        raise CatalogError(f"structure inconnue: {name!r} (connues: {', '.join(sorted(CATALOG))})")
    arity, builder = CATALOG[name]
    _expect(params, arity, name)
    return builder(*params)


def catalog_from_options(text: str, n: int | None = None, k: int | None = None) -> CatalogEntry:
    """
    Résout --catalog avec --n / --k quand les paramètres ne sont pas en ligne

    symplectic lit --n comme la dimension (paire), volume comme la dimension,
    multicotangent comme (q, k).
    """
    name, params = parse_catalog_name(text)
    if params or name == "g2":
        return catalog_get(name, params)
    if name == "symplectic":
        n = 2 if n is None else n
        if n % 2:
            raise CatalogError(f"dimension symplectique impaire: {n}")
        return catalog_get(name, (n // 2,))
    if name == "volume":
        return catalog_get(name, (3 if n is None else n,))
    if name == "multicotangent":
        return catalog_get(name, (2 if n is None else n, 1 if k is None else k))
    return catalog_get(name, params)
