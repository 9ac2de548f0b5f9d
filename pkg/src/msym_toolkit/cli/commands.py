"""
Sous-commandes de la ligne de commande

Chaque commande reçoit les arguments argparse et retourne un AnalysisReport.
"""

import argparse
from collections.abc import Callable
from fractions import Fraction
from pathlib import Path
from typing import Any

from msym_toolkit import __version__
from msym_toolkit.analysis import (
    Classification,
    MultisymplecticStructure,
    classify_multivector,
    conformal_check,
    default_sample_points,
    euler_homogeneity,
    hamiltonian_field,
    hamiltonian_form,
    hamiltonian_solve,
    homotopy_operator,
    is_exact,
    nondegeneracy_report,
    omega_hat,
    poisson_bracket,
    span_check,
    verify_bracket_theorems,
    verify_localization_identities,
)
from msym_toolkit.core.exceptions import ContractViolation, DegreeError, InputError
from msym_toolkit.exterior import LinearEndo, Point, Variance, format_tensor
from msym_toolkit.exterior.operators import exterior_derivative
from msym_toolkit.exterior.tensors import KForm, KVector
from msym_toolkit.monitoring.logger import get_logger
from msym_toolkit.schouten import verify_graded_identities
from msym_toolkit.stabilizer import (
    commutator_closure,
    conformal_stabilizer,
    invariant_forms,
    special_conformal_check,
    stabilizer_algebra,
    verify_conformal_bracket,
)

from .catalog import CatalogEntry, catalog_from_options
from .parser import parse_form
from .report import AnalysisReport

logger = get_logger(__name__)

Command = Callable[[argparse.Namespace], AnalysisReport]


# --- Lecture des entrées ---------------------------------------------------


def read_form_text(args: argparse.Namespace) -> str | None:
    if getattr(args, "file", None):
        try:
            return Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"lecture impossible de {args.file}: {exc}") from exc
    return getattr(args, "form", None)


def load_entry(args: argparse.Namespace) -> CatalogEntry | None:
    if getattr(args, "catalog", None):
        return catalog_from_options(args.catalog, args.n, args.k)
    return None


def load_structure(args: argparse.Namespace) -> tuple[MultisymplecticStructure, dict[str, Any]]:
    """Structure depuis --catalog ou --form/--file (avec --n)"""
    entry = load_entry(args)
    if entry is not None:
        return entry.structure(), {"catalog": entry.to_dict()}
    text = read_form_text(args)
    if text is None:
        raise InputError("structure manquante : --catalog, --form ou --file")
    dim = require_dim(args)
    omega = parse_form(text, dim, Variance.FORM)
    return MultisymplecticStructure(omega), {"form": format_tensor(omega), "dim": dim}


def require_dim(args: argparse.Namespace) -> int:
    if args.n is None:
        raise InputError("--n (dimension) est requis avec --form/--file")
    return args.n


def parse_point(text: str, dim: int) -> Point:
    """Ex. : "1,2,1/2" → Point (virgules ou espaces)"""
    parts = [part for part in text.replace(",", " ").split() if part]
    try:
        coords = tuple(Fraction(part) for part in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"coordonnée invalide dans {text!r}") from exc
    if len(coords) != dim:
        raise InputError(f"point {text!r} de dimension {len(coords)}, attendu {dim}")
    return Point(coords)


def sample_points(args: argparse.Namespace, dim: int) -> list[Point]:
    if args.point:
        return [parse_point(text, dim) for text in args.point]
    return default_sample_points(dim, seed=args.seed)


def parse_matrix(text: str) -> LinearEndo:
    """Ex. : "1,0;0,1", lignes séparées par des points-virgules"""
    try:
        rows = [
            [Fraction(v) for v in row.replace(",", " ").split()]
            for row in text.split(";")
            if row.strip()
        ]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"matrice invalide: {text!r}") from exc
    return LinearEndo.from_rows(rows)


def _report(command: str, args: argparse.Namespace, inputs: dict[str, Any], results: dict[str, Any], passed: bool = True) -> AnalysisReport:
    return AnalysisReport(command, inputs, results, args.seed, __version__, passed)


# --- Commandes -------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> AnalysisReport:
    """Rapport de non-dégénérescence"""
    S, inputs = load_structure(args)
    report = nondegeneracy_report(S, sample_points(args, S.dim))
    results = report.to_dict()
    entry = load_entry(args)
    if entry is not None:
        results["documented_strongly_nondegenerate"] = entry.strongly_nondegenerate
    return _report("check", args, inputs, results)


def cmd_kernel(args: argparse.Namespace) -> AnalysisReport:
    """Noyau de Ω̂_m aux points"""
    S, inputs = load_structure(args)
    m = 1 if args.m is None else args.m
    inputs["m"] = m
    matrices = [omega_hat(S, m, p) for p in sample_points(args, S.dim)]
    return _report("kernel", args, inputs, {"points": [hat.to_dict() for hat in matrices]})


def cmd_solve(args: argparse.Namespace) -> AnalysisReport:
    """Résolution de i(X)Ω = dζ"""
    S, inputs = load_structure(args)
    if args.zeta is None:
        raise InputError("--zeta est requis")
    m = 1 if args.m is None else args.m
    zeta = parse_form(args.zeta, S.dim, Variance.FORM)
    inputs.update({"m": m, "zeta": format_tensor(zeta)})
    solutions = [hamiltonian_solve(S, zeta, m, p) for p in sample_points(args, S.dim)]
    results: dict[str, Any] = {"points": [s.to_dict() for s in solutions]}
    if S.is_constant:
        field = hamiltonian_field(S, zeta, m)
        results["global_field"] = format_tensor(field) if field is not None else None
    return _report("solve", args, inputs, results)


def cmd_classify(args: argparse.Namespace) -> AnalysisReport:
    """Classification d'un champ de multivecteurs"""
    S, inputs = load_structure(args)
    if args.field is None:
        raise InputError("--field est requis")
    X = parse_form(args.field, S.dim, Variance.VECTOR)
    inputs["field"] = format_tensor(X)
    classification = classify_multivector(S, X)
    results: dict[str, Any] = {"classification": classification}
    if classification is Classification.HAMILTONIAN:
        results["hamiltonian_form"] = format_tensor(hamiltonian_form(S, X))
    return _report("classify", args, inputs, results)


def _field_for(S: MultisymplecticStructure, form: KForm, text: str | None, label: str) -> KVector:
    m = S.degree - form.degree - 1
    if m < 1:
        raise DegreeError(f"{label} de degré {form.degree} : aucun champ hamiltonien de degré ≥ 1")
    if text is not None:
        return parse_form(text, S.dim, Variance.VECTOR)
    if not S.is_constant:
        raise InputError(f"champ de {label} requis quand Ω n'est pas constante")
    field = hamiltonian_field(S, form, m)
    if field is None:
        raise InputError(f"{label} n'est pas une forme hamiltonienne de Ω")
    return field


def cmd_bracket(args: argparse.Namespace) -> AnalysisReport:
    """Crochet de Poisson {ξ, ζ}"""
    S, inputs = load_structure(args)
    if args.xi is None or args.zeta is None:
        raise InputError("--xi et --zeta sont requis")
    xi = parse_form(args.xi, S.dim, Variance.FORM)
    zeta = parse_form(args.zeta, S.dim, Variance.FORM)
    X = _field_for(S, xi, args.xi_field, "ξ")
    Y = _field_for(S, zeta, args.zeta_field, "ζ")
    inputs.update({"xi": format_tensor(xi), "zeta": format_tensor(zeta)})
    bracket = poisson_bracket(S, xi, zeta, X, Y)
    results = {
        "xi_field": format_tensor(X),
        "zeta_field": format_tensor(Y),
        "bracket": format_tensor(bracket),
        "degree": bracket.degree,
    }
    return _report("bracket", args, inputs, results)


def cmd_homotopy(args: argparse.Namespace) -> AnalysisReport:
    """Primitive d'une forme fermée par l'opérateur d'homotopie"""
    text = read_form_text(args)
    if text is None:
        raise InputError("--form ou --file est requis")
    a = parse_form(text, require_dim(args), Variance.FORM)
    closed = exterior_derivative(a, strict=False).is_zero()
    results = {
        "degree": a.degree,
        "closed": closed,
        "exact": is_exact(a),
        "homotopy": format_tensor(homotopy_operator(a)),
    }
    return _report("homotopy", args, {"form": format_tensor(a), "dim": a.dim}, results)


def cmd_stab(args: argparse.Namespace) -> AnalysisReport:
    """Stabilisateur, stabilisateur conforme et formes invariantes"""
    S, inputs = load_structure(args)
    stab = stabilizer_algebra(S.omega)
    conformal = conformal_stabilizer(S.omega)
    closure = commutator_closure(stab)
    results: dict[str, Any] = {
        "dimension": stab.dimension,
        "stabilizer": stab.to_dict(),
        "conformal_dimension": conformal.dimension,
        "conformal_closure": commutator_closure(conformal).to_dict(),
        "closure": closure.to_dict(),
    }
    if stab.dimension:
        results["invariant_forms"] = [
            invariant_forms(stab, degree).to_dict() for degree in (S.degree - 1, S.degree)
        ]
    if not closure.closed:
        raise ContractViolation("le stabilisateur n'est pas fermé par commutateur")
    return _report("stab", args, inputs, results)


def cmd_identities(args: argparse.Namespace) -> AnalysisReport:
    """Suites d'identités graduées (Schouten, localisation, homotopie, crochets)"""
    dim = 3 if args.n is None else args.n
    max_degree = min(dim, 2 if args.max_degree is None else args.max_degree)
    reports = verify_graded_identities(dim, max_degree, args.cases, args.seed)
    reports += verify_localization_identities(dim, args.cases, args.seed)
    inputs: dict[str, Any] = {"dim": dim, "max_degree": max_degree, "cases": args.cases}
    if args.catalog or args.form or args.file:
        S, structure_inputs = load_structure(args)
        inputs.update(structure_inputs)
        reports += verify_bracket_theorems(S, args.cases, args.seed)
    passed = all(report.passed for report in reports)
    results = {"identities": [report.to_dict() for report in reports], "all_passed": passed}
    return _report("identities", args, inputs, results, passed)


def cmd_valence(args: argparse.Namespace) -> AnalysisReport:
    """Valence c avec φ*Ω2 = cΩ1 pour φ linéaire"""
    S, inputs = load_structure(args)
    if args.matrix is not None:
        A = parse_matrix(args.matrix)
    elif args.scale is not None:
        try:
            A = LinearEndo.scalar(S.dim, Fraction(args.scale))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"facteur invalide: {args.scale!r}") from exc
    else:
        raise InputError("--matrix ou --scale est requis")
    target = parse_form(args.target, S.dim, Variance.FORM) if args.target else S.omega
    inputs.update({"matrix": [[str(v) for v in row] for row in A.rows], "target": format_tensor(target)})
    valence = special_conformal_check(A, S.omega, target)
    results: dict[str, Any] = {"valence": valence, "special_conformal": valence is not None}
    if valence is not None and target == S.omega and S.is_constant:
        results["bracket_relation"] = verify_conformal_bracket(S, A, args.cases, args.seed).to_dict()
    return _report("valence", args, inputs, results)


def cmd_homogeneity(args: argparse.Namespace) -> AnalysisReport:
    """Homogénéité d'Euler, engendrement et facteur conforme d'un champ"""
    S, inputs = load_structure(args)
    results: dict[str, Any] = {"euler_constant": euler_homogeneity(S)}
    if S.is_constant:
        results["span"] = span_check(S, sample_points(args, S.dim)).to_dict()
    if args.field is not None:
        X = parse_form(args.field, S.dim, Variance.VECTOR)
        inputs["field"] = format_tensor(X)
        sigma = conformal_check(S, X)
        results["conformal_factor"] = format_tensor(KForm.function(sigma)) if sigma is not None else None
        results["constant_factor"] = sigma.is_constant() if sigma is not None else None
    return _report("homogeneity", args, inputs, results)


COMMANDS: dict[str, tuple[Command, str]] = {
    "check": (cmd_check, "non-dégénérescence de Ω"),
    "kernel": (cmd_kernel, "noyau de Ω̂_m aux points"),
    "solve": (cmd_solve, "résolution de i(X)Ω = dζ"),
    "classify": (cmd_classify, "classification d'un champ de multivecteurs"),
    "bracket": (cmd_bracket, "crochet de Poisson de deux formes hamiltoniennes"),
    "homotopy": (cmd_homotopy, "primitive par l'opérateur d'homotopie"),
    "stab": (cmd_stab, "stabilisateur linéaire et formes invariantes"),
    "identities": (cmd_identities, "suites d'identités graduées"),
    "valence": (cmd_valence, "valence d'une application linéaire"),
    "homogeneity": (cmd_homogeneity, "homogénéité d'Euler et champs conformes"),
}
