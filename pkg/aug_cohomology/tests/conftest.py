# --- tests/conftest.py ---

import os

import numpy as np
import pytest

# Os testes nunca tocam na cache em disco nem no Redis
os.environ["CACHE_BACKEND"] = "none"
os.environ.setdefault("LOG_LEVEL", "WARNING")

# Importa módulos do projeto
from aug_cohomology.core.scalars import QQ, FieldSpec
from aug_cohomology.harness.registry import trunc_poly


@pytest.fixture
def qq() -> FieldSpec:
    return QQ


@pytest.fixture
def gf3() -> FieldSpec:
    return FieldSpec(3)


@pytest.fixture
def rng():
    """Gerador determinístico para matrizes e amostras aleatórias."""
    return np.random.default_rng(42)


# --- Álgebras de Exemplo ---

@pytest.fixture
def dual_x(qq):
    """k[x]/x² sobre ℚ."""
    return trunc_poly(qq, 2, "x")


@pytest.fixture
def dual_y(qq):
    """k[y]/y² sobre ℚ."""
    return trunc_poly(qq, 2, "y")


@pytest.fixture
def cubic_x(qq):
    """k[x]/x³ sobre ℚ."""
    return trunc_poly(qq, 3, "x")


@pytest.fixture
def cubic_y(qq):
    return trunc_poly(qq, 3, "y")


@pytest.fixture
def quartic_x(qq):
    return trunc_poly(qq, 4, "x")
