"""
Tests unitaires pour les stabilisateurs et la valence
"""

from fractions import Fraction

import pytest

from msym_toolkit.cli.catalog import g2, symplectic, volume
from msym_toolkit.core.exceptions import DimensionMismatchError, InputError
from msym_toolkit.exterior.linear import LinearEndo
from msym_toolkit.exterior.operators import lie_derivative
from msym_toolkit.exterior.polynomial import Polynomial
from msym_toolkit.exterior.tensors import KForm, KVector, Point
from msym_toolkit.stabilizer import (
    commutator_closure,
    conformal_stabilizer,
    invariant_forms,
    special_conformal_check,
    stabilizer_algebra,
    verify_conformal_bracket,
)


@pytest.fixture(scope="module")
def g2_stabilizer():
    """Fixture: algèbre d'isotropie de la forme G2"""
    return stabilizer_algebra(g2().omega)


class TestStabilizerAlgebra:
    """Tests pour stabilizer_algebra"""

    def test_g2(self, g2_stabilizer):
        """Test: dim stab(G2) = 14"""
        assert g2_stabilizer.dimension == 14

    def test_symplectic_r4(self):
        """Test: dim sp(4) = 10"""
        assert stabilizer_algebra(symplectic(2).omega).dimension == 10

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_volume(self, n):
        """Test: sl(n), de dimension n² − 1"""
        assert stabilizer_algebra(volume(n).omega).dimension == n * n - 1

    def test_basis_preserves_form(self):
        """Test: chaque élément de base annule L(X_A)ω"""
        omega = symplectic(2).omega
        stab = stabilizer_algebra(omega)

        for A in stab.basis:
            assert lie_derivative(A.as_vector_field(), omega).is_zero()
        assert all(w == 0 for w in stab.weights)

    def test_constant_tensor_input(self):
        """Test: une forme évaluée (ConstantTensor) est acceptée"""
        value = volume(3).omega.evaluate(Point((0, 0, 0)))

        assert stabilizer_algebra(value).dimension == 8

    def test_non_constant_rejected(self):
        """Test: forme à coefficients non constants refusée"""
        omega = KForm.basis_element(3, (0, 1), Polynomial.variable(3, 2))

        with pytest.raises(InputError):
            stabilizer_algebra(omega)

    def test_vector_rejected(self):
        """Test: un multivecteur n'est pas une forme"""
        with pytest.raises(InputError):
            stabilizer_algebra(KVector.basis_element(3, (0, 1)))

    def test_closure(self, g2_stabilizer):
        """Test: l'algèbre est fermée pour le commutateur"""
        report = commutator_closure(g2_stabilizer)

        assert report.closed
        assert report.pairs == 14 * 13 // 2
        assert report.counterexample is None


class TestConformalStabilizer:
    """Tests pour conformal_stabilizer"""

    def test_dimensions(self):
        """Test: une dimension de plus que le stabilisateur (G2 15, sp(4) 11, volume n²)"""
        assert conformal_stabilizer(g2().omega).dimension == 15
        assert conformal_stabilizer(symplectic(2).omega).dimension == 11
        assert conformal_stabilizer(volume(3).omega).dimension == 9

    def test_weights(self):
        """Test: L(X_A)ω = c_A ω pour chaque élément, un poids non nul au moins"""
        omega = symplectic(2).omega
        stab = conformal_stabilizer(omega)

        for A, c in zip(stab.basis, stab.weights, strict=True):
            assert lie_derivative(A.as_vector_field(), omega) == omega * c
        assert any(c != 0 for c in stab.weights)

    def test_zero_form_rejected(self):
        """Test: pas de stabilisateur conforme pour ω = 0"""
        with pytest.raises(InputError):
            conformal_stabilizer(KForm.zero(3, 2))


class TestInvariantForms:
    """Tests pour invariant_forms"""

    def test_g2_three_forms(self, g2_stabilizer):
        """Test: les 3-formes invariantes sont les multiples de Ω"""
        invariant = invariant_forms(g2_stabilizer, 3)

        assert invariant.dimension == 1
        assert invariant.basis[0] == g2().omega

    def test_g2_two_forms(self, g2_stabilizer):
        """Test: aucune 2-forme invariante"""
        assert invariant_forms(g2_stabilizer, 2).dimension == 0

    def test_symplectic(self):
        """Test: 2-formes invariantes par sp(4) : la droite de ω"""
        stab = stabilizer_algebra(symplectic(2).omega)

        assert invariant_forms(stab, 2).dimension == 1
        assert invariant_forms(stab, 1).dimension == 0

    def test_volume(self):
        """Test: sl(3) préserve le volume mais aucune 1-forme"""
        stab = stabilizer_algebra(volume(3).omega)

        assert invariant_forms(stab, 3).dimension == 1
        assert invariant_forms(stab, 1).dimension == 0

    def test_functions_are_invariant(self):
        """Test: en degré 0 les constantes sont invariantes"""
        stab = stabilizer_algebra(volume(2).omega)

        assert invariant_forms(stab, 0).dimension == 1

    def test_degree_out_of_range(self):
        """Test: degré hors de 0..n"""
        stab = stabilizer_algebra(volume(2).omega)

        with pytest.raises(InputError):
            invariant_forms(stab, 3)


class TestValence:
    """Tests pour special_conformal_check"""

    @pytest.mark.parametrize("lam", [Fraction(2), Fraction(1, 3), Fraction(-1)])
    def test_scalar_on_g2(self, lam):
        """Test: λI sur G2 a la valence λ³"""
        omega = g2().omega

        assert special_conformal_check(LinearEndo.scalar(7, lam), omega, omega) == lam**3

    def test_volume_determinant(self):
        """Test: sur le volume, la valence est le déterminant"""
        A = LinearEndo.from_rows([[1, 2, 0], [0, 1, 0], [0, 0, 3]])
        omega = volume(3).omega

        assert special_conformal_check(A, omega, omega) == 3

    def test_multiplicative(self):
        """Test: valence(AB) = valence(A) · valence(B)"""
        omega = symplectic(1).omega
        A = LinearEndo.from_rows([[2, 0], [0, 3]])
        B = LinearEndo.from_rows([[Fraction(1, 2), 0], [0, 5]])

        a = special_conformal_check(A, omega, omega)
        b = special_conformal_check(B, omega, omega)
        assert (a, b) == (6, Fraction(5, 2))
        assert special_conformal_check(A @ B, omega, omega) == a * b

    def test_not_conformal(self):
        """Test: diag(2, 1, 1, 1) ne multiplie pas ω symplectique par une constante"""
        omega = symplectic(2).omega
        A = LinearEndo.from_rows([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])

        assert special_conformal_check(A, omega, omega) is None

    def test_degree_mismatch(self):
        """Test: formes de degrés différents"""
        plane = KForm.basis_element(3, (0, 1))

        assert special_conformal_check(LinearEndo.identity(3), volume(3).omega, plane) is None

    def test_zero_form_has_no_valence(self):
        """Test: φ*0 = 0 · ω ne donne pas de valence nulle"""
        omega = symplectic(1).omega
        zero = KForm.zero(2, 2)
        A = LinearEndo.from_rows([[2, 0], [0, 3]])

        assert special_conformal_check(A, omega, zero) is None
        assert special_conformal_check(A, zero, omega) is None

    def test_singular(self):
        """Test: matrice singulière refusée"""
        omega = symplectic(1).omega

        with pytest.raises(InputError):
            special_conformal_check(LinearEndo.from_rows([[1, 1], [1, 1]]), omega, omega)

    def test_size_mismatch(self):
        """Test: matrice de mauvaise taille"""
        omega = symplectic(1).omega

        with pytest.raises(DimensionMismatchError):
            special_conformal_check(LinearEndo.identity(3), omega, omega)


class TestConformalBracket:
    """Tests pour φ*{ξ, ζ} = (1/c) {φ*ξ, φ*ζ}"""

    def test_scaling_on_symplectic(self, symplectic_r4):
        """Test: φ = 2I, valence 4"""
        report = verify_conformal_bracket(symplectic_r4, LinearEndo.scalar(4, 2), cases=10, seed=3)

        assert report.name == "conformal_bracket"
        assert report.passed

    def test_shear_on_volume(self, volume_r3):
        """Test: cisaillement de déterminant 3 sur le volume"""
        A = LinearEndo.from_rows([[1, 2, 0], [0, 1, 0], [0, 0, 3]])

        assert verify_conformal_bracket(volume_r3, A, cases=10, seed=5).passed

    def test_not_special_conformal(self, symplectic_r4):
        """Test: φ non conforme refusé"""
        A = LinearEndo.from_rows([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])

        with pytest.raises(InputError):
            verify_conformal_bracket(symplectic_r4, A, cases=1)
