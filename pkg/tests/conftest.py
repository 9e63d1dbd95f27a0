# ============================================================================
# Test Configuration & Fixtures
# ============================================================================
import random
from fractions import Fraction as F

import pytest
from hypothesis import settings as hypothesis_settings

from app.config import get_settings
from app.services.linalg import Matrix
from app.services.scalars import QContext
from app.services.split import split_decomposition
from app.services.tridiagonal import ParallelSystem, build_seed

hypothesis_settings.register_profile("exact", max_examples=40, deadline=None)
hypothesis_settings.load_profile("exact")


@pytest.fixture(autouse=True)
def fresh_settings():
    """Each test sees settings built from its own environment"""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def q2() -> QContext:
    return QContext(q=F(2), d=1)


@pytest.fixture
def d1() -> ParallelSystem:
    """θ = (1/2, 2), θ* = (2, 1/2), ζ = (1, 1), q = 2"""
    return build_seed("d1")


@pytest.fixture
def d1_phi5() -> ParallelSystem:
    return build_seed("d1-phi5")


@pytest.fixture
def d2() -> ParallelSystem:
    """θ = (1/4, 1, 4), θ* = (4, 1, 1/4), ζ = (1, 1, 1), q = 2"""
    return build_seed("d2")


@pytest.fixture
def d0() -> ParallelSystem:
    one = Matrix.from_rows([[1]])
    return ParallelSystem.from_matrices(one, one, [1], [1], QContext(q=F(2)))


@pytest.fixture
def d1_split(d1):
    return split_decomposition(d1)


@pytest.fixture
def d2_split(d2):
    return split_decomposition(d2)


@pytest.fixture
def commuting_d1(d1) -> ParallelSystem:
    """The d=1 fixture with A* replaced by A"""
    return ParallelSystem.from_matrices(d1.A, d1.A, d1.theta, d1.theta, d1.q_ctx)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(1729)


def random_matrix(rng: random.Random, n: int, bound: int = 5) -> Matrix:
    return Matrix.from_rows(
        [[F(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
    )
