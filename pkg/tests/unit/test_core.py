"""
Tests unitaires pour core, monitoring et utils
"""

from fractions import Fraction
from unittest.mock import Mock, patch

import pytest

from msym_toolkit.core.config import get_config, reset_config, update_config
from msym_toolkit.core.exceptions import (
    ContractViolation,
    DegreeError,
    DimensionMismatchError,
    InputError,
    ParseError,
)
from msym_toolkit.core.validators import (
    NumericRangeValidator,
    RequiredValidator,
    SquareMatrixValidator,
    check_same_dim,
)
from msym_toolkit.exterior.polynomial import Polynomial
from msym_toolkit.exterior.tensors import Variance
from msym_toolkit.monitoring.logger import get_logger, log_event
from msym_toolkit.utils.decorators import log_call, validate_inputs
from msym_toolkit.utils.helpers import format_rational, json_pretty_print, to_jsonable


class TestConfig:
    """Tests pour la configuration"""

    def test_defaults(self):
        """Test: valeurs par défaut sans variable d'environnement"""
        config = get_config()

        assert config.app_name == "msym-toolkit"
        assert config.default_seed == 0
        assert config.default_cases == 25
        assert config.output_format == "text"

    def test_seed_from_env(self, monkeypatch):
        """Test: MSYM_SEED est lu depuis l'environnement"""
        monkeypatch.setenv("MSYM_SEED", "42")
        reset_config()

        assert get_config().default_seed == 42

    def test_invalid_seed_is_input_error(self, monkeypatch):
        """Test: un MSYM_SEED non entier est une erreur d'entrée"""
        monkeypatch.setenv("MSYM_SEED", "abc")
        reset_config()

        with pytest.raises(InputError):
            get_config()

    def test_update_config_ignores_unknown_keys(self):
        """Test: update_config ne garde que les champs connus"""
        config = update_config(default_cases=7, unknown="x")

        assert config.default_cases == 7
        assert not hasattr(config, "unknown")
        assert get_config() is config


class TestExceptions:
    """Tests pour la hiérarchie d'erreurs"""

    def test_exit_codes(self):
        """Test: codes de sortie des familles d'erreurs"""
        assert InputError.exit_code == 2
        assert DegreeError.exit_code == 2
        assert ContractViolation.exit_code == 3

    def test_parse_error_position(self):
        """Test: ParseError porte ligne et colonne"""
        error = ParseError("syntaxe invalide", 1, 5)

        assert error.line == 1
        assert error.column == 5
        assert "colonne 5" in str(error)


class TestValidators:
    """Tests pour les validateurs"""

    def test_numeric_range(self):
        """Test: NumericRangeValidator accepte les bornes incluses"""
        validator = NumericRangeValidator(1, 3, what="m")

        assert validator(1) == 1
        assert validator(3) == 3
        with pytest.raises(DegreeError):
            validator(4)

    def test_numeric_range_rejects_bool(self):
        """Test: un booléen n'est pas un degré"""
        with pytest.raises(DegreeError):
            NumericRangeValidator(0, 3)(True)

    def test_required(self):
        """Test: RequiredValidator rejette None et les chaînes vides"""
        with pytest.raises(InputError):
            RequiredValidator("forme")(None)
        with pytest.raises(InputError):
            RequiredValidator("forme")("  ")

    def test_square_matrix(self):
        """Test: matrices non carrées rejetées"""
        assert SquareMatrixValidator().validate([[1, 0], [0, 1]])
        assert not SquareMatrixValidator().validate([[1, 0]])
        assert not SquareMatrixValidator(size=3).validate([[1, 0], [0, 1]])

    def test_check_same_dim(self):
        """Test: dimensions différentes détectées"""
        assert check_same_dim(Polynomial.zero(2), Polynomial.zero(2)) == 2
        with pytest.raises(DimensionMismatchError):
            check_same_dim(Polynomial.zero(2), Polynomial.zero(3))


class TestLogger:
    """Tests pour le système de logging"""

    def test_get_logger_returns_logger(self):
        """Test: get_logger retourne un logger"""
        logger = get_logger("test")

        assert logger is not None
        assert hasattr(logger, "info")
        assert hasattr(logger, "warning")

    def test_log_event_with_context(self):
        """Test: log_event avec contexte"""
        with patch("msym_toolkit.monitoring.logger.get_logger") as mock_get_logger:
            mock_logger = Mock()
            mock_get_logger.return_value = mock_logger

            log_event("stabilizer_solved", dim=7, dimension=14)

            mock_logger.info.assert_called_once_with("stabilizer_solved", dim=7, dimension=14)


class TestDecorators:
    """Tests pour les décorateurs"""

    def test_log_call_emits_event(self):
        """Test: log_call émet l'événement à la fin de l'appel"""
        with patch("msym_toolkit.utils.decorators.get_logger") as mock_get_logger:
            mock_logger = Mock()
            mock_get_logger.return_value = mock_logger

            @log_call("answer_computed")
            def answer():
                return 42

            assert answer() == 42
            event, = mock_logger.info.call_args.args
            assert event == "answer_computed"

    def test_log_call_reraises(self):
        """Test: log_call relance l'exception"""

        @log_call("failing_step")
        def failing():
            raise DegreeError("degré")

        with pytest.raises(DegreeError):
            failing()

    def test_validate_inputs(self):
        """Test: validate_inputs rejette une valeur refusée"""

        @validate_inputs(dim=lambda value: value >= 1)
        def build(dim):
            return dim

        assert build(3) == 3
        with pytest.raises(InputError):
            build(0)


class TestHelpers:
    """Tests pour les fonctions utilitaires"""

    def test_format_rational(self):
        """Test: entiers et fractions"""
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-1, 3)) == "-1/3"

    def test_to_jsonable(self):
        """Test: Fraction, Enum et tuples convertis"""
        data = {"c": Fraction(1, 2), "v": Variance.FORM, "t": (1, 2)}

        assert to_jsonable(data) == {"c": "1/2", "v": "form", "t": [1, 2]}

    def test_json_sorted_keys(self):
        """Test: sortie JSON triée et stable"""
        assert json_pretty_print({"b": 1, "a": 2}) == json_pretty_print({"a": 2, "b": 1})
