import pytest

from dao.TractType import TractType
from dao.VerdictType import VerdictType
from service.axioms.CircuitMinorService import CircuitMinorService
from service.axioms.PerfectnessService import PerfectnessService
from service.matroid.MatroidService import MatroidService
from service.tract.PartialFieldTracts import PrimeFieldTract
from util.BitsetUtil import BitsetUtil
from util.TractException import InvalidInputError, UnsupportedScaleError


@pytest.fixture(scope="module")
def perfectness_service():
    return PerfectnessService({"max_tract_size": 3, "max_elements": 5, "max_rank": 3})


def test_oriented_u24_is_perfect(perfectness_service, oriented_u24):
    report = perfectness_service.perfectness_probe(oriented_u24)
    assert report.verdict == VerdictType.PASS
    assert report.notes["vectors"] > 1 and report.notes["covectors"] > 1


def test_krasner_uniform_is_perfect(perfectness_service, krasner_uniform):
    assert perfectness_service.perfectness_probe(krasner_uniform(2, 4)).verdict == VerdictType.PASS


def test_gf3_vectors_form_the_kernel(perfectness_service, gp_service, realization_service, registry):
    gf3 = registry.get_tract(TractType.GF3.value)
    phi = realization_service.gp_from_matrix(gf3, [[1, 0, 1, 1], [0, 1, 1, 2]])
    report = perfectness_service.perfectness_probe(gp_service.circuits_from_gp(phi))
    assert report.verdict == VerdictType.PASS
    # 二维子空间及其正交补各有 3^2 个元素
    assert report.notes["vectors"] == 9
    assert report.notes["covectors"] == 9


def test_weak_sign_pushforward_has_no_orthogonality_violations(perfectness_service, registry, oriented_u24):
    hom = registry.get_hom("sign-to-weaksign")
    circuits = CircuitMinorService.pushforward_circuits(hom, oriented_u24)
    report = perfectness_service.perfectness_probe(circuits)
    assert report.verdict == VerdictType.PASS
    assert report.failures == []
    assert report.notes["vectors"] == 25
    assert report.notes["covectors"] == 25


def test_gf2_is_perfect(perfectness_service, gp_service, realization_service, registry):
    gf2 = registry.get_tract(TractType.GF2.value)
    phi = realization_service.gp_from_matrix(gf2, [[1, 0, 1, 1], [0, 1, 1, 1]])
    report = perfectness_service.perfectness_probe(gp_service.circuits_from_gp(phi))
    assert report.verdict == VerdictType.PASS
    assert report.notes["vectors"] == 4
    assert report.notes["covectors"] == 4


def test_perfectness_rejects_infinite_tracts(perfectness_service, gp_service, triangle_gp):
    with pytest.raises(UnsupportedScaleError):
        perfectness_service.perfectness_probe(gp_service.circuits_from_gp(triangle_gp))


def test_sign_rank_one_census(perfectness_service, sign):
    records = list(perfectness_service.enumerate_gp(sign, 1, 2))
    assert len(records) == 4
    assert all(record.strong for record in records)
    assert perfectness_service.census(sign, 1, 2) == {"matroids": 3, "weak": 4, "strong": 4}


def test_krasner_census_counts_matroids(perfectness_service, krasner):
    # 秩 2 的标号拟阵：先选环，再把其余元素分成至少两个平行类
    assert perfectness_service.census(krasner, 2, 4) == {"matroids": 36, "weak": 36, "strong": 36}


@pytest.mark.parametrize("size", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_sign_weak_and_strong_agree(perfectness_service, sign, size):
    census = perfectness_service.census(sign, 2, size)
    assert census["weak"] == census["strong"]
    if size == 4:
        assert census["matroids"] == 36


def test_enumerated_functions_fix_first_basis(perfectness_service, sign):
    for record in perfectness_service.enumerate_gp(sign, 2, 3):
        assert record.phi.values[0][1] == sign.one
        assert tuple(record.phi.support_bases()) == record.bases


def test_enumeration_caps(perfectness_service, registry, sign):
    with pytest.raises(UnsupportedScaleError):
        list(perfectness_service.enumerate_gp(registry.get_tract(TractType.TROPICAL.value), 1, 2))
    with pytest.raises(UnsupportedScaleError):
        list(perfectness_service.enumerate_gp(PrimeFieldTract(5), 1, 2))
    with pytest.raises(UnsupportedScaleError):
        list(perfectness_service.enumerate_gp(sign, 2, 6))
    with pytest.raises(UnsupportedScaleError):
        list(perfectness_service.enumerate_gp(sign, 4, 5))
    with pytest.raises(InvalidInputError):
        list(perfectness_service.enumerate_gp(sign, 3, 2))


@pytest.mark.slow
def test_krasner_census_on_five_elements(perfectness_service, krasner):
    assert perfectness_service.census(krasner, 2, 5) == {"matroids": 171, "weak": 171, "strong": 171}


_INITIAL_SHAPES = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4),
                   pytest.param(2, 5, marks=pytest.mark.slow),
                   pytest.param(3, 5, marks=pytest.mark.slow)]


@pytest.mark.parametrize("rank,size", _INITIAL_SHAPES)
def test_initial_strong_census_is_regular(perfectness_service, gp_service, registry, rank, size):
    initial = registry.get_tract(TractType.INITIAL.value)
    homs = [registry.get_hom(f"initial:{target}") for target in (TractType.GF2.value, TractType.GF3.value)]
    strong = [record for record in perfectness_service.enumerate_gp(initial, rank, size) if record.strong]
    assert strong
    for record in strong:
        # 同时在 GF(2) 与 GF(3) 上可表示即为正则拟阵
        for hom in homs:
            pushed = gp_service.pushforward_gp(hom, record.phi)
            assert gp_service.check_gp(pushed, "strong").passed, (hom.hom_id, record.bases)


def test_initial_census_never_contains_u24(perfectness_service, registry):
    initial = registry.get_tract(TractType.INITIAL.value)
    u24 = MatroidService.uniform(2, 4)
    bases = tuple(sorted(u24.bases, key=BitsetUtil.to_indices))
    assert all(record.bases != bases for record in perfectness_service.enumerate_gp(initial, 2, 4))


@pytest.mark.slow
def test_initial_has_no_strong_function_on_mk4(perfectness_service, registry):
    initial = registry.get_tract(TractType.INITIAL.value)
    records = list(perfectness_service.enumerate_on_matroid(initial, MatroidService.mk4()))
    assert records
    assert not any(record.strong for record in records)


def test_enumerate_on_matroid_matches_full_enumeration(perfectness_service, sign):
    u23 = MatroidService.uniform(2, 3)
    on_matroid = {record.phi.values for record in perfectness_service.enumerate_on_matroid(sign, u23)}
    bases = tuple(sorted(u23.bases, key=BitsetUtil.to_indices))
    full = {record.phi.values for record in perfectness_service.enumerate_gp(sign, 2, 3) if record.bases == bases}
    assert on_matroid == full
