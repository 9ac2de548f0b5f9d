"""
Tests unitaires pour l'algèbre extérieure exacte
"""

from fractions import Fraction

import pytest

from msym_toolkit.core.exceptions import DegreeError, DimensionMismatchError, InputError, VarianceError
from msym_toolkit.exterior import linalg
from msym_toolkit.exterior.linear import LinearEndo
from msym_toolkit.exterior.multiindex import basis, contract_index, merge, remove, sort_with_sign
from msym_toolkit.exterior.operators import (
    contract,
    directional_derivative,
    exterior_derivative,
    lie_derivative,
    pullback_linear,
    wedge,
)
from msym_toolkit.exterior.polynomial import Polynomial
from msym_toolkit.exterior.printing import format_polynomial, format_tensor
from msym_toolkit.exterior.sampling import make_rng, random_form, random_multivector
from msym_toolkit.exterior.tensors import KForm, KVector, Point


def x(dim, i):
    """Coordonnée x_i, 1-based comme à l'affichage"""
    return Polynomial.variable(dim, i - 1)


def dx(dim, *indices, coeff=1):
    return KForm.basis_element(dim, tuple(i - 1 for i in indices), coeff)


def e(dim, *indices, coeff=1):
    return KVector.basis_element(dim, tuple(i - 1 for i in indices), coeff)


class TestMultiIndex:
    """Tests pour la combinatoire des multi-indices"""

    def test_basis_is_lexicographic(self):
        """Test: base lexicographique de Λ^2(R^3)"""
        assert basis(3, 2) == ((0, 1), (0, 2), (1, 2))

    def test_basis_out_of_range_is_empty(self):
        """Test: aucun multi-index hors de 0..dim"""
        assert basis(2, 3) == ()
        assert basis(2, -1) == ()

    def test_sort_with_sign(self):
        """Test: parité de la permutation"""
        assert sort_with_sign((1, 0)) == ((0, 1), -1)
        assert sort_with_sign((2, 0, 1)) == ((0, 1, 2), 1)
        assert sort_with_sign((1, 1)) == (None, 0)

    def test_merge(self):
        """Test: dx1∧dx3 ∧ dx2 = −dx1∧dx2∧dx3"""
        assert merge((0, 2), (1,)) == ((0, 1, 2), -1)
        assert merge((0,), (0,)) == (None, 0)

    def test_remove(self):
        """Test: i(∂2)(dx1∧dx2∧dx3) = −dx1∧dx3"""
        assert remove((0, 1, 2), 1) == ((0, 2), -1)

    def test_contract_index_order(self):
        """Test: i(∂1∧∂2)(dx1∧dx2) = i(∂1)(i(∂2)(dx1∧dx2)) = −1"""
        assert contract_index((0, 1), (0, 1)) == ((), -1)


class TestPolynomial:
    """Tests pour les polynômes exacts"""

    def test_arithmetic(self):
        """Test: (x1 + 1)^2 = x1^2 + 2x1 + 1"""
        p = x(2, 1) + 1

        assert p**2 == x(2, 1) * x(2, 1) + x(2, 1) * 2 + 1

    def test_diff_and_evaluate(self):
        """Test: ∂/∂x1 (x1^2 x2) = 2 x1 x2"""
        p = x(2, 1) * x(2, 1) * x(2, 2)

        assert p.diff(0) == (x(2, 1) * x(2, 2)).scale(2)
        assert p.evaluate([Fraction(1, 2), 3]) == Fraction(3, 4)

    def test_substitute_linear(self):
        """Test: x1 ∘ (x ↦ Ax) pour A = [[0, 1], [1, 0]] donne x2"""
        rows = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]

        assert x(2, 1).substitute_linear(rows) == x(2, 2)

    def test_exact_quotient(self):
        """Test: (x1^2 − x2^2) / (x1 − x2) = x1 + x2, x1 / x2 sans quotient"""
        a, b = x(2, 1), x(2, 2)

        assert (a * a - b * b).exact_quotient(a - b) == a + b
        assert a.exact_quotient(b) is None
        assert Polynomial.zero(2).exact_quotient(b) == Polynomial.zero(2)

    def test_terms_are_fractions(self):
        """Test: coefficients exposés en Fraction, triés en ordre inverse"""
        p = x(2, 1).scale(Fraction(1, 3)) + 2

        assert p.terms == {(1, 0): Fraction(1, 3), (0, 0): Fraction(2)}
        assert [mono for mono, _ in p.items()] == [(1, 0), (0, 0)]
        assert p.constant_value() == 2
        assert p.total_degree() == 1
        assert Polynomial.zero(2).total_degree() == -1

    def test_substitute_linear_is_simultaneous(self):
        """Test: x1·x2 ∘ (x1 ↦ x1 + x2, x2 ↦ x2) = x1·x2 + x2^2"""
        rows = [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]]

        assert (x(2, 1) * x(2, 2)).substitute_linear(rows) == x(2, 1) * x(2, 2) + x(2, 2) ** 2

    def test_invalid_dimension(self):
        """Test: aucun polynôme sans variable"""
        with pytest.raises(InputError):
            Polynomial.zero(0)

    def test_dimension_mismatch(self):
        """Test: polynômes en nombres de variables différents"""
        with pytest.raises(DimensionMismatchError):
            x(2, 1) + x(3, 1)

    def test_format(self):
        """Test: affichage trié, rationnels p/q"""
        p = x(3, 1) * x(3, 1) * x(3, 2) - x(3, 3).scale(Fraction(1, 2)) + 4

        assert format_polynomial(p) == "x1*x1*x2 - 1/2*x3 + 4"


class TestTensors:
    """Tests pour les formes et multivecteurs"""

    def test_normalization_sign(self):
        """Test: x1 dx2∧dx1 = −x1 dx1∧dx2"""
        form = KForm(2, 2, {(1, 0): x(2, 1)})

        assert form == dx(2, 1, 2, coeff=-x(2, 1))

    def test_repeated_index_is_zero(self):
        """Test: dx1∧dx1 = 0"""
        assert KForm(2, 2, {(0, 0): 1}).is_zero()

    def test_vacuous_degree_must_be_zero(self):
        """Test: un terme non nul de degré > dim est refusé"""
        assert KForm.zero(2, 3).is_vacuous()
        with pytest.raises(DegreeError):
            KForm(2, 3, {(0, 1, 1): 1})

    def test_sum_of_mixed_degrees(self):
        """Test: somme de degrés différents refusée sauf côté nul"""
        assert dx(3, 1) + KForm.zero(3, 2) == dx(3, 1)
        with pytest.raises(DegreeError):
            dx(3, 1) + dx(3, 1, 2)

    def test_mixed_variance(self):
        """Test: formes et multivecteurs ne s'additionnent pas"""
        with pytest.raises(VarianceError):
            dx(2, 1) + e(2, 1)

    def test_evaluate(self):
        """Test: valeur exacte de x1 dx1 en (3, 0)"""
        value = dx(2, 1, coeff=x(2, 1)).evaluate(Point((3, 0)))

        assert value.to_vector() == [Fraction(3), Fraction(0)]


class TestPrinting:
    """Tests pour l'affichage"""

    def test_parenthesized_coefficient(self):
        """Test: coefficient à plusieurs termes entre parenthèses"""
        assert format_tensor(dx(2, 1, 2, coeff=x(2, 1) - x(2, 2))) == "(x1 - x2)*dx1^dx2"

    def test_signed_terms(self):
        """Test: signes et rationnels"""
        form = dx(2, 1, coeff=x(2, 1).scale(Fraction(-1, 2))) - dx(2, 2)

        assert format_tensor(form) == "-1/2*x1*dx1 - dx2"

    def test_zero_keeps_degree(self):
        """Test: l'objet nul garde son degré à l'affichage"""
        assert format_tensor(KForm.zero(2, 2)) == "0*dx1^dx2"
        assert format_tensor(KForm.zero(2, 3)) == "0*dx1^dx2^dx2"
        assert format_tensor(KVector.zero(3, 1)) == "0*e1"
        assert format_tensor(KForm.zero(3, 0)) == "0"


class TestOperators:
    """Tests pour wedge, d, i et L"""

    def test_wedge_antisymmetry(self):
        """Test: dx2∧dx1 = −dx1∧dx2"""
        assert wedge(dx(2, 2), dx(2, 1)) == -dx(2, 1, 2)

    def test_wedge_graded_commutativity(self):
        """Test: a∧b = (−1)^{|a||b|} b∧a sur 100 paires tirées (n ≤ 7, degrés ≤ 4)"""
        rng = make_rng(17)
        for _ in range(100):
            n = int(rng.integers(1, 8))
            p = int(rng.integers(0, min(4, n) + 1))
            q = int(rng.integers(0, min(4, n) + 1))
            a = random_form(rng, n, p)
            b = random_form(rng, n, q)

            assert wedge(a, b) == wedge(b, a) * (-1) ** (p * q)

    def test_contract_is_antiderivation(self):
        """Test: i(v)(a∧b) = i(v)a∧b + (−1)^{|a|} a∧i(v)b"""
        rng = make_rng(19)
        for _ in range(50):
            n = int(rng.integers(2, 8))
            p = int(rng.integers(1, min(4, n - 1) + 1))
            q = int(rng.integers(1, min(4, n - p) + 1))
            v = random_multivector(rng, n, 1)
            a = random_form(rng, n, p)
            b = random_form(rng, n, q)

            expected = wedge(contract(v, a), b) + wedge(a, contract(v, b)) * (-1) ** p
            assert contract(v, wedge(a, b)) == expected

    def test_lie_derivative_is_derivation(self):
        """Test: L(X)(a∧b) = L(X)a∧b + a∧L(X)b pour un champ de vecteurs X"""
        rng = make_rng(23)
        for _ in range(30):
            n = int(rng.integers(2, 6))
            p = int(rng.integers(0, n))
            q = int(rng.integers(0, n - p + 1))
            X = random_multivector(rng, n, 1)
            a = random_form(rng, n, p)
            b = random_form(rng, n, q)

            expected = wedge(lie_derivative(X, a), b) + wedge(a, lie_derivative(X, b))
            assert lie_derivative(X, wedge(a, b)) == expected

    def test_wedge_overflow_is_vacuous_zero(self):
        """Test: un degré total > dim donne l'objet nul"""
        product = wedge(dx(2, 1, 2), dx(2, 1))

        assert product.is_zero()
        assert product.degree == 3

    def test_wedge_mixed_variance(self):
        """Test: dx1 ∧ ∂1 refusé"""
        with pytest.raises(VarianceError):
            wedge(dx(2, 1), e(2, 1))

    def test_exterior_derivative(self):
        """Test: d(x1 x2 dx3) = x2 dx1∧dx3 + x1 dx2∧dx3"""
        form = dx(3, 3, coeff=x(3, 1) * x(3, 2))
        expected = dx(3, 1, 3, coeff=x(3, 2)) + dx(3, 2, 3, coeff=x(3, 1))

        assert exterior_derivative(form) == expected

    def test_d_squared_is_zero(self):
        """Test: d∘d = 0 sur des formes tirées"""
        rng = make_rng(3)
        for _ in range(20):
            form = random_form(rng, 4, int(rng.integers(0, 3)), max_poly_degree=3)

            assert exterior_derivative(exterior_derivative(form)).is_zero()

    def test_d_top_degree_strict(self):
        """Test: d d'une forme de degré n en mode strict"""
        with pytest.raises(DegreeError):
            exterior_derivative(dx(2, 1, 2))
        assert exterior_derivative(dx(2, 1, 2), strict=False).degree == 3

    def test_contract(self):
        """Test: i(∂1)(dx1∧dx2) = dx2, i(∂2)(dx1∧dx2) = −dx1"""
        assert contract(e(2, 1), dx(2, 1, 2)) == dx(2, 2)
        assert contract(e(2, 2), dx(2, 1, 2)) == -dx(2, 1)

    def test_contract_degree_overflow(self):
        """Test: contraction d'une 1-forme par un bivecteur"""
        with pytest.raises(DegreeError):
            contract(e(2, 1, 2), dx(2, 1))
        assert contract(e(2, 1, 2), dx(2, 1), strict=False).is_zero()

    def test_lie_derivative_of_volume(self):
        """Test: L(x1∂1)(dx1∧dx2∧dx3) = dx1∧dx2∧dx3"""
        volume = dx(3, 1, 2, 3)

        assert lie_derivative(e(3, 1, coeff=x(3, 1)), volume) == volume

    def test_lie_derivative_of_function(self):
        """Test: L(X)f = X(f) pour un champ de vecteurs"""
        X = e(2, 1, coeff=x(2, 2))
        f = x(2, 1) * x(2, 1)

        assert lie_derivative(X, KForm.function(f)) == KForm.function(directional_derivative(X, f))
        assert directional_derivative(X, f) == (x(2, 1) * x(2, 2)).scale(2)

    def test_lie_derivative_degree(self):
        """Test: L(X)a est de degré |a| − m + 1"""
        X = e(4, 1, 2, coeff=x(4, 3))

        assert lie_derivative(X, dx(4, 1, 2, 3, coeff=x(4, 4))).degree == 2

    def test_lie_derivative_of_function_field(self):
        """Test: un multivecteur de degré 0 agit par L(f)a = df∧a"""
        f = x(3, 1) * x(3, 2)
        a = dx(3, 3, coeff=x(3, 1))
        expected = wedge(exterior_derivative(KForm.function(f)), a)

        assert lie_derivative(KVector.function(f), a) == expected

    def test_cartan_commutes_with_d(self):
        """Test: L(X)∘d = d∘L(X) pour les champs de vecteurs"""
        rng = make_rng(11)
        for _ in range(15):
            X = random_multivector(rng, 3, 1)
            a = random_form(rng, 3, int(rng.integers(0, 2)))

            assert lie_derivative(X, exterior_derivative(a)) == exterior_derivative(
                lie_derivative(X, a)
            )

    def test_pullback_scaling(self):
        """Test: (2·Id)*(dx1∧dx2) = 4 dx1∧dx2"""
        assert pullback_linear(LinearEndo.scalar(2, 2), dx(2, 1, 2)) == dx(2, 1, 2, coeff=4)

    def test_pullback_composition(self):
        """Test: (AB)* = B*∘A*"""
        A = LinearEndo.from_rows([[1, 2, 0], [0, 1, 0], [1, 0, 1]])
        B = LinearEndo.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 3]])
        rng = make_rng(5)
        for _ in range(10):
            a = random_form(rng, 3, int(rng.integers(0, 4)))

            assert pullback_linear(A @ B, a) == pullback_linear(B, pullback_linear(A, a))

    def test_pullback_commutes_with_d(self):
        """Test: φ*∘d = d∘φ* pour φ linéaire"""
        A = LinearEndo.from_rows([[1, 1], [0, 2]])
        a = dx(2, 1, coeff=x(2, 1) * x(2, 2))

        assert pullback_linear(A, exterior_derivative(a)) == exterior_derivative(pullback_linear(A, a))


class TestLinearEndo:
    """Tests pour les endomorphismes linéaires"""

    def test_identity_field_is_euler(self):
        """Test: X_Id = x1∂1 + x2∂2"""
        assert LinearEndo.identity(2).as_vector_field() == e(2, 1, coeff=x(2, 1)) + e(2, 2, coeff=x(2, 2))

    def test_commutator(self):
        """Test: [E12, E21] = E11 − E22"""
        E12 = LinearEndo.elementary(2, 0, 1)
        E21 = LinearEndo.elementary(2, 1, 0)

        assert E12.commutator(E21) == LinearEndo.from_rows([[1, 0], [0, -1]])

    def test_flat_roundtrip_and_invariants(self):
        """Test: from_flat inverse de flatten, trace et déterminant"""
        A = LinearEndo.from_rows([[1, 2], [3, 4]])

        assert LinearEndo.from_flat(2, A.flatten()) == A
        assert A.trace() == 5
        assert A.determinant() == -2
        assert A.is_invertible()


class TestLinalg:
    """Tests pour l'algèbre linéaire exacte"""

    def test_nullspace(self):
        """Test: noyau de x + y = 0"""
        assert linalg.nullspace([[Fraction(1), Fraction(1)]], 2) == [[Fraction(-1), Fraction(1)]]

    def test_solve(self):
        """Test: solution particulière et système incompatible"""
        rows = [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]]

        assert linalg.solve(rows, [Fraction(1), Fraction(2)], 2) == [Fraction(1), Fraction(0)]
        assert linalg.solve(rows, [Fraction(1), Fraction(3)], 2) is None

    def test_rank_and_span(self):
        """Test: rang exact et appartenance à l'espace engendré"""
        vectors = [[Fraction(1), Fraction(0), Fraction(1)], [Fraction(0), Fraction(1), Fraction(1)]]

        assert linalg.rank(vectors, 3) == 2
        assert linalg.in_span(vectors, [Fraction(1), Fraction(1), Fraction(2)], 3)
        assert not linalg.in_span(vectors, [Fraction(0), Fraction(0), Fraction(1)], 3)

    def test_determinant(self):
        """Test: déterminant rationnel exact"""
        assert linalg.determinant([[Fraction(1, 2), Fraction(1)], [Fraction(1), Fraction(4)]]) == Fraction(1)


class TestSampling:
    """Tests pour les générateurs reproductibles"""

    def test_same_seed_same_form(self):
        """Test: même graine, même forme"""
        first = random_form(make_rng(9), 4, 2)
        second = random_form(make_rng(9), 4, 2)

        assert first == second
