"""
Tests unitaires pour le parseur d'expressions
"""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from hypothesis.extra.lark import from_lark
from lark import Lark

from msym_toolkit.cli.parser import GRAMMAR, parse_expression, parse_form, parse_value
from msym_toolkit.core.exceptions import DegreeError, InputError, ParseError, VarianceError
from msym_toolkit.exterior.polynomial import Polynomial
from msym_toolkit.exterior.printing import format_tensor
from msym_toolkit.exterior.tensors import KForm, KVector, Variance

DIM = 3


def x(i):
    return Polynomial.variable(DIM, i - 1)


def dx(*indices, coeff=1):
    return KForm.basis_element(DIM, tuple(i - 1 for i in indices), coeff)


def e(*indices, coeff=1):
    return KVector.basis_element(DIM, tuple(i - 1 for i in indices), coeff)


def assert_round_trip(value):
    variance = value.variance
    assert parse_form(format_tensor(value), value.dim, variance) == value


class TestParseForm:
    """Tests pour parse_form"""

    def test_symplectic(self):
        """Test: somme de produits extérieurs"""
        value = parse_form("dx1^dx2 + dx3^dx4", 4)

        assert value == KForm(4, 2, {(0, 1): 1, (2, 3): 1})

    def test_coefficients(self):
        """Test: coefficients polynomiaux et rationnels"""
        expected = dx(2, coeff=x(1).scale(Fraction(1, 2))) - dx(1, coeff=x(3))

        assert parse_form("1/2*x1*dx2 - x3*dx1", DIM) == expected

    def test_parenthesized_coefficient(self):
        """Test: (x1 - x2)*dx1^dx2"""
        assert parse_form("(x1 - x2)*dx1^dx2", DIM) == dx(1, 2, coeff=x(1) - x(2))

    def test_star_binds_tighter_than_wedge(self):
        """Test: x1*dx1^dx2 = (x1 dx1)∧dx2"""
        assert parse_form("x1*dx1^dx2", DIM) == dx(1, 2, coeff=x(1))

    def test_antisymmetry(self):
        """Test: dx2^dx1 = −dx1^dx2 et dx1^dx1 = 0"""
        assert parse_form("dx2^dx1", DIM) == -dx(1, 2)
        assert parse_form("dx1^dx1", DIM) == KForm.zero(DIM, 2)

    def test_unary_minus(self):
        """Test: le moins unaire"""
        assert parse_form("-dx1 - -dx2", DIM) == dx(2) - dx(1)

    def test_multivector(self):
        """Test: e1^e2 est un bivecteur"""
        value = parse_form("x1*e1^e2 + e2^e3", DIM)

        assert value == e(1, 2, coeff=x(1)) + e(2, 3)
        assert value.variance is Variance.VECTOR

    def test_function_defaults_to_form(self):
        """Test: une expression sans base est une 0-forme"""
        assert parse_form("x1*x2 + 3", DIM) == KForm.function(x(1) * x(2) + 3)

    def test_function_with_variance(self):
        """Test: avec variance attendue, la fonction est un 0-multivecteur"""
        value = parse_form("x1", DIM, Variance.VECTOR)

        assert isinstance(value, KVector)
        assert value.degree == 0

    def test_zero_keeps_degree(self):
        """Test: 0*dx1^dx2 garde le degré 2"""
        value = parse_form("0*dx1^dx2", DIM)

        assert value.is_zero()
        assert value.degree == 2

    def test_scalar_wedge(self):
        """Test: un scalaire dans ^ multiplie"""
        assert parse_form("2^dx1", DIM) == dx(1, coeff=2)

    def test_parse_value_keeps_polynomial(self):
        """Test: parse_value ne convertit pas un polynôme"""
        assert parse_value("x1*x1", DIM) == x(1) * x(1)

    def test_expression(self):
        """Test: forme normale d'une expression"""
        expression = parse_expression("dx2 ^ dx1 + x1 * dx1 ^ dx2", DIM)

        assert expression.source == "dx2 ^ dx1 + x1 * dx1 ^ dx2"
        assert expression.normal_form == "(x1 - 1)*dx1^dx2"


class TestParseErrors:
    """Tests pour les erreurs du parseur"""

    def test_index_out_of_range(self):
        """Test: dx9 en dimension 3, position signalée"""
        with pytest.raises(ParseError) as exc_info:
            parse_form("dx1^dx9", DIM)

        assert (exc_info.value.line, exc_info.value.column) == (1, 5)

    def test_variable_out_of_range(self):
        """Test: x0 n'existe pas (indices à partir de 1)"""
        with pytest.raises(ParseError):
            parse_form("x0*dx1", DIM)

    def test_syntax_error_position(self):
        """Test: opérateur en double"""
        with pytest.raises(ParseError) as exc_info:
            parse_form("dx1 ^ ^ dx2", DIM)

        assert exc_info.value.line == 1
        assert exc_info.value.column == 7

    def test_unexpected_end(self):
        """Test: expression tronquée"""
        with pytest.raises(ParseError):
            parse_form("dx1 +", DIM)

    def test_unknown_character(self):
        """Test: caractère hors grammaire"""
        with pytest.raises(ParseError):
            parse_form("dx1 & dx2", DIM)

    def test_zero_denominator(self):
        """Test: 1/0 refusé"""
        with pytest.raises(ParseError):
            parse_form("1/0*dx1", DIM)

    def test_product_of_tensors(self):
        """Test: `*` entre deux tenseurs"""
        with pytest.raises(ParseError):
            parse_form("dx1*dx2", DIM)

    def test_mixed_variance_sum(self):
        """Test: dx1 + e1"""
        with pytest.raises(VarianceError):
            parse_form("dx1 + e1", DIM)

    def test_mixed_variance_wedge(self):
        """Test: dx1 ^ e1"""
        with pytest.raises(VarianceError):
            parse_form("dx1^e1", DIM)

    def test_expected_variance(self):
        """Test: une forme quand un multivecteur est attendu"""
        with pytest.raises(VarianceError):
            parse_form("dx1", DIM, Variance.VECTOR)

    def test_mixed_degrees(self):
        """Test: somme de degrés 1 et 2"""
        with pytest.raises(DegreeError):
            parse_form("dx1 + dx1^dx2", DIM)

    def test_empty_expression(self):
        """Test: expression vide refusée"""
        with pytest.raises(InputError, match="expression requise"):
            parse_form("   ", DIM)

    def test_bad_dimension(self):
        """Test: dimension nulle refusée"""
        with pytest.raises(InputError):
            parse_form("x1", 0)


class TestRoundTrip:
    """Tests pour parse(format(t)) == t"""

    @pytest.mark.parametrize(
        "value",
        [
            dx(1, 2) + dx(2, 3, coeff=x(1) * x(3)),
            dx(1, coeff=x(1).scale(Fraction(-1, 2))) - dx(3),
            e(1, 2, 3, coeff=x(2) - 1),
            KForm.zero(DIM, 2),
            KVector.zero(DIM, 1),
            KForm.zero(DIM, 4),
            KForm.function(x(1) * x(2) - Fraction(3, 4)),
            KVector.function(x(1)),
            KVector.zero(DIM, 0),
        ],
        ids=[
            "forme",
            "rationnel",
            "trivecteur",
            "zero",
            "zero-vecteur",
            "zero-vacant",
            "fonction",
            "fonction-vecteur",
            "zero-fonction-vecteur",
        ],
    )
    def test_examples(self, value):
        """Test: relecture exacte"""
        assert_round_trip(value)

    def test_function_variance_comes_from_parser(self):
        """Test: une fonction s'écrit sans variance, relue en forme par défaut"""
        field = KVector.function(x(1))
        text = format_tensor(field)

        assert text == "x1"
        assert parse_form(text, DIM) == KForm.function(x(1))
        assert parse_form(text, DIM, Variance.VECTOR) == field


_index = st.integers(min_value=1, max_value=DIM)
_coefficient = st.one_of(
    st.integers(min_value=0, max_value=5).map(str),
    st.builds("{}/{}".format, st.integers(0, 5), st.integers(1, 4)),
    _index.map("x{}".format),
)


def _expressions(symbol: str) -> st.SearchStrategy[str]:
    word = st.lists(_index.map(f"{symbol}{{}}".format), min_size=1, max_size=2).map("^".join)
    term = st.builds("{}*{}".format, _coefficient, word) | word
    return st.recursive(
        term,
        lambda inner: st.builds("{} + {}".format, inner, inner)
        | st.builds("{} - {}".format, inner, inner)
        | st.builds("({})".format, inner)
        | inner.map("-{}".format),
        max_leaves=6,
    )


_GRAMMAR_STRINGS = from_lark(
    Lark(GRAMMAR, start="start"),
    explicit={
        "NUMBER": st.integers(0, 12).map(str),
        "RATIONAL": st.builds("{}/{}".format, st.integers(0, 9), st.integers(0, 4)),
        "VAR": st.integers(0, 5).map("x{}".format),
        "DX": st.integers(0, 5).map("dx{}".format),
        "EVEC": st.integers(0, 5).map("e{}".format),
    },
)


class TestFuzz:
    """Tests à base de propriétés pour le parseur"""

    @settings(
        max_examples=200, derandomize=True, deadline=None, suppress_health_check=[HealthCheck.too_slow]
    )
    @given(text=st.one_of(_expressions("dx"), _expressions("e")))
    def test_well_formed_round_trip(self, text):
        """Test: expression bien formée → erreur de degré ou relecture exacte"""
        try:
            value = parse_form(text, DIM)
        except DegreeError:
            return
        assert_round_trip(value)

    @pytest.mark.slow
    @settings(
        max_examples=1000,
        derandomize=True,
        deadline=None,
        suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
    )
    @given(text=_GRAMMAR_STRINGS)
    def test_grammar_fuzz(self, text):
        """Test: toute chaîne de la grammaire est refusée proprement ou relue à l'identique"""
        try:
            value = parse_form(text, DIM)
        except InputError:
            return
        assert_round_trip(value)
