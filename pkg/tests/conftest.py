"""
Configuration pytest et fixtures communes
"""

import sys
from pathlib import Path

import pytest

# Ajouter src au path pour les imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from msym_toolkit.analysis import MultisymplecticStructure  # noqa: E402
from msym_toolkit.cli.catalog import g2, multicotangent, symplectic, volume  # noqa: E402
from msym_toolkit.core.config import reset_config  # noqa: E402


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch):
    """Fixture: configuration relue depuis un environnement propre"""
    for name in ("MSYM_SEED", "MSYM_CASES", "MSYM_SAMPLE_POINTS", "MSYM_LOG_LEVEL", "MSYM_OUTPUT"):
        monkeypatch.delenv(name, raising=False)
    reset_config()
    yield
    reset_config()


@pytest.fixture
def symplectic_r2():
    """Fixture: dx1∧dx2 sur R^2"""
    return symplectic(1).structure()


@pytest.fixture
def symplectic_r4():
    """Fixture: dx1∧dx2 + dx3∧dx4 sur R^4"""
    return symplectic(2).structure()


@pytest.fixture
def volume_r3():
    """Fixture: dx1∧dx2∧dx3"""
    return volume(3).structure()


@pytest.fixture(scope="session")
def g2_structure() -> MultisymplecticStructure:
    """Fixture: 3-forme G2 sur R^7"""
    return g2().structure()


@pytest.fixture
def cotangent_r4():
    """Fixture: multicotangent(2, 1), le fibré cotangent de R^2"""
    return multicotangent(2, 1).structure()
