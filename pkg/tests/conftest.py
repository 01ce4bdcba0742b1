from itertools import combinations

import pytest

from dao.TractType import TractType
from service.axioms.CircuitSet import CircuitSet
from service.example.ExampleService import ExampleService
from service.gp.GPService import GPService
from service.realize.RealizationService import RealizationService
from service.tract.TractElement import ZERO
from service.tract.TractRegistry import TractRegistry
from service.tract.TractVerifyService import CheckBudget
from service.vector.Vector import GroundSet, Vector

# 两行矩阵 (1,1,1,1),(1,2,3,4) 给出的定向 U2,4 的符号圈
ORIENTED_U24_CIRCUITS = [(1, -1, 1, 0), (1, -1, 0, 1), (1, 0, -1, 1), (0, 1, -1, 1)]


@pytest.fixture(scope="session")
def registry():
    return TractRegistry()


@pytest.fixture(scope="session")
def sign(registry):
    return registry.get_tract(TractType.SIGN.value)


@pytest.fixture(scope="session")
def krasner(registry):
    return registry.get_tract(TractType.KRASNER.value)


@pytest.fixture(scope="session")
def small_budget():
    return CheckBudget(max_terms=5, samples=2000, seed=0xB0B1)


@pytest.fixture
def make_vector():
    """整数或有理载荷构造向量，0 表示零元"""
    def build(tract, *payloads):
        return Vector(tract, tuple(ZERO if p == 0 else tract.element(p) for p in payloads))
    return build


@pytest.fixture
def make_circuits(make_vector):
    def build(tract, rows, labels=()):
        ground = GroundSet(len(rows[0]), tuple(labels))
        return CircuitSet.of(tract, ground, [make_vector(tract, *row) for row in rows])
    return build


@pytest.fixture
def oriented_u24(sign, make_circuits):
    return make_circuits(sign, ORIENTED_U24_CIRCUITS)


@pytest.fixture
def krasner_uniform(krasner, make_circuits):
    """𝕂 上 U_{r,m} 的圈：全部 r+1 元子集的示性向量"""
    def build(rank, size):
        rows = [[1 if i in subset else 0 for i in range(size)]
                for subset in combinations(range(size), rank + 1)]
        return make_circuits(krasner, rows)
    return build


@pytest.fixture(scope="session")
def example_service():
    return ExampleService()


@pytest.fixture(scope="session")
def gp_service():
    return GPService()


@pytest.fixture(scope="session")
def realization_service():
    return RealizationService()


@pytest.fixture(scope="session")
def triangle_gp(example_service):
    return example_service.get_example("triangle-u36").builder()


@pytest.fixture(scope="session")
def weissauer_gp(example_service):
    return example_service.get_example("weissauer-phase").builder()


@pytest.fixture(scope="session")
def regular_k4_gp(example_service):
    return example_service.get_example("regular-k4").builder()
