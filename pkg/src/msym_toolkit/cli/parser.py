"""
Parseur des expressions de formes et de multivecteurs (lark, LALR)

Grammaire : variables x1..xn, covecteurs dx1..dxn, vecteurs e1..en,
entiers et rationnels p/q, opérateurs + - * ^ et parenthèses.
`*` lie plus fort que `^` (associatif à gauche), le moins unaire le plus faiblement.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from msym_toolkit.core.exceptions import InputError, ParseError, VarianceError
from msym_toolkit.core.validators import NumericRangeValidator, RequiredValidator
from msym_toolkit.exterior.operators import wedge
from msym_toolkit.exterior.polynomial import Polynomial
from msym_toolkit.exterior.printing import format_tensor
from msym_toolkit.exterior.tensors import TENSOR_CLASSES, GradedTensor, KForm, Variance
from msym_toolkit.utils.decorators import validate_inputs

GRAMMAR = r"""
?start: sum

?sum: signed
    | sum PLUS signed -> add
    | sum MINUS signed -> sub

?signed: wedge
    | MINUS signed -> neg

?wedge: product
    | wedge "^" product -> wedge_op

?product: atom
    | product "*" atom -> mul_op

?atom: RATIONAL -> rational
    | NUMBER -> number
    | VAR -> var
    | DX -> dx
    | EVEC -> evec
    | "(" sum ")"

PLUS: "+"
MINUS: "-"
RATIONAL.2: /[0-9]+\/[0-9]+/
NUMBER: /[0-9]+/
VAR: /x[0-9]+/
DX: /dx[0-9]+/
EVEC: /e[0-9]+/

%import common.WS
%ignore WS
"""

Value = Polynomial | GradedTensor


@lru_cache(maxsize=1)
def get_parser() -> Lark:
    return Lark(GRAMMAR, parser="lalr", propagate_positions=True)


class _FormBuilder(Transformer):
    """Construit polynômes et tenseurs normalisés à partir de l'arbre"""

    def __init__(self, dim: int):
        super().__init__()
        self.dim = dim

    def _index(self, token: Token, prefix: str) -> int:
        idx = int(token[len(prefix):])
        if not 1 <= idx <= self.dim:
            raise ParseError(
                f"indice {token} hors de 1..{self.dim}", token.line, token.column
            )
        return idx - 1

    def _tensor(self, value: Value, like: GradedTensor) -> GradedTensor:
        if isinstance(value, Polynomial):
            return type(like).function(value)
        return value

    def number(self, children):
        (token,) = children
        return Polynomial.constant(self.dim, int(token))

    def rational(self, children):
        (token,) = children
        numerator, denominator = (int(part) for part in token.split("/"))
        if denominator == 0:
            raise ParseError("dénominateur nul", token.line, token.column)
        return Polynomial.constant(self.dim, Fraction(numerator, denominator))

    def var(self, children):
        (token,) = children
        return Polynomial.variable(self.dim, self._index(token, "x"))

    def dx(self, children):
        (token,) = children
        return TENSOR_CLASSES[Variance.FORM].basis_element(self.dim, (self._index(token, "dx"),))

    def evec(self, children):
        (token,) = children
        return TENSOR_CLASSES[Variance.VECTOR].basis_element(self.dim, (self._index(token, "e"),))

    @v_args(meta=True)
    def mul_op(self, meta, children):
        left, right = children
        if isinstance(left, GradedTensor) and isinstance(right, GradedTensor):
            raise ParseError("`*` entre deux tenseurs (utiliser ^)", meta.line, meta.column)
        if isinstance(left, Polynomial):
            return right * left
        return left * right

    def wedge_op(self, children):
        left, right = children
        if isinstance(left, Polynomial):
            return right * left
        if isinstance(right, Polynomial):
            return left * right
        return wedge(left, right)

    def _combine(self, left: Value, right: Value) -> Value:
        if isinstance(left, Polynomial) and isinstance(right, Polynomial):
            return left + right
        if isinstance(left, Polynomial):
            left = self._tensor(left, right)
        if isinstance(right, Polynomial):
            right = self._tensor(right, left)
        return left + right

    def add(self, children):
        left, _, right = children
        return self._combine(left, right)

    def sub(self, children):
        left, _, right = children
        return self._combine(left, -right)

    def neg(self, children):
        _, value = children
        return -value


@dataclass(frozen=True)
class FormExpression:
    """Texte source et objet normalisé ; `normal_form` se relit à l'identique"""

    source: str
    value: GradedTensor

    @property
    def normal_form(self) -> str:
        return format_tensor(self.value)


@validate_inputs(text=RequiredValidator("expression"))
def parse_value(text: str, dim: int) -> Value:
    """Parse sans imposer de variance (un polynôme reste un polynôme)"""
    NumericRangeValidator(1, None, what="dimension")(dim)
    try:
        tree = get_parser().parse(text)
    except UnexpectedEOF as exc:
        raise ParseError(f"fin d'expression inattendue, attendu {sorted(exc.expected)}") from exc
    except UnexpectedInput as exc:
        raise ParseError("syntaxe invalide", exc.line, exc.column) from exc
    try:
        return _FormBuilder(dim).transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, InputError):
            raise exc.orig_exc from None
        raise


def parse_form(text: str, dim: int, variance: Variance | None = None) -> GradedTensor:
    """
    Parse une forme (dx) ou un multivecteur (e) en dimension `dim`

    Args:
        text: Expression, par ex. "dx1^dx2 + dx3^dx4"
        dim: Dimension de l'ouvert
        variance: Variance attendue ; une expression sans symbole de base
            devient une fonction de cette variance (forme par défaut)

    Raises:
        ParseError: Erreur lexicale ou syntaxique, indice hors plage
        VarianceError: Mélange de dx et de e, ou variance différente de celle attendue
        DegreeError: Somme de termes de degrés différents
    """
    value = parse_value(text, dim)
    if isinstance(value, Polynomial):
        cls = TENSOR_CLASSES[variance] if variance is not None else KForm
        return cls.function(value)
    if variance is not None and value.variance is not Variance(variance):
        raise VarianceError(f"{variance} attendu, l'expression est de type {value.variance}")
    return value


def parse_expression(text: str, dim: int, variance: Variance | None = None) -> FormExpression:
    return FormExpression(text, parse_form(text, dim, variance))
