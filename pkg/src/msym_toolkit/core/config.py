"""
Configuration centralisée de la boîte à outils
"""

import os
from dataclasses import dataclass, replace

from dotenv import load_dotenv

from .exceptions import InputError

SEED_ENV_VAR = "MSYM_SEED"


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise InputError(f"{name} doit être un entier (reçu: {raw!r})") from e


@dataclass(frozen=True)
class ToolkitConfig:
    """Configuration de la boîte à outils"""

    # Informations de base
    app_name: str = "msym-toolkit"
    app_version: str = "1.0.0"

    # Tirages aléatoires reproductibles
    default_seed: int = 0
    default_cases: int = 25
    random_sample_points: int = 2

    # Debug et logging
    log_level: str = "WARNING"

    # Sortie des rapports
    output_format: str = "text"

    @classmethod
    def from_env(cls) -> "ToolkitConfig":
        """Crée la configuration depuis les variables d'environnement"""
        return cls(
            default_seed=_int_from_env(SEED_ENV_VAR, cls.default_seed),
            default_cases=_int_from_env("MSYM_CASES", cls.default_cases),
            random_sample_points=_int_from_env("MSYM_SAMPLE_POINTS", cls.random_sample_points),
            log_level=os.getenv("MSYM_LOG_LEVEL", cls.log_level),
            output_format=os.getenv("MSYM_OUTPUT", cls.output_format),
        )


_config: ToolkitConfig | None = None


def get_config() -> ToolkitConfig:
    """Retourne la configuration (singleton, chargée une seule fois)"""
    global _config

    if _config is None:
        load_dotenv()
        _config = ToolkitConfig.from_env()
    return _config


def update_config(**kwargs) -> ToolkitConfig:
    """Met à jour la configuration"""
    global _config

    config = get_config()
    known = {key: value for key, value in kwargs.items() if hasattr(config, key)}
    _config = replace(config, **known)
    return _config


def reset_config() -> None:
    """Oublie la configuration chargée (relue au prochain appel)"""
    global _config
    _config = None
