import pytest

from dao.TractType import TractType
from dao.VerdictType import VerdictType
from service.axioms.CircuitAxiomService import CircuitAxiomService
from service.axioms.CircuitMinorService import CircuitMinorService
from service.axioms.CircuitSet import CircuitSet
from service.axioms.DualPairService import DualPairService
from service.matroid.MatroidService import MatroidService
from service.vector.Vector import GroundSet
from util.BitsetUtil import BitsetUtil
from util.TractException import InvalidInputError, MismatchError, UnsupportedScaleError

ORIENTED_U24_COCIRCUITS = [(1, 1, 1, 0), (1, 1, 0, -1), (1, 0, -1, -1), (0, 1, 1, 1)]


@pytest.fixture(scope="module")
def axiom_service():
    return CircuitAxiomService()


@pytest.fixture(scope="module")
def dual_pair_service():
    return DualPairService()


@pytest.fixture(scope="module")
def minor_service():
    return CircuitMinorService()


@pytest.fixture
def oriented_cocircuits(sign, make_circuits):
    return make_circuits(sign, ORIENTED_U24_COCIRCUITS)


# ---------- 圈公理 ----------

@pytest.mark.parametrize("mode", ["weak", "strong", "c3pp"])
def test_oriented_u24_circuits_pass(axiom_service, oriented_u24, mode):
    report = axiom_service.check_circuit_axioms(oriented_u24, mode)
    assert report.verdict == VerdictType.PASS
    assert "C1" in report.notes


def test_flipped_sign_breaks_weak_elimination(axiom_service, sign, make_circuits):
    circuits = make_circuits(sign, [(1, 1, 1, 0), (1, -1, 0, 1), (1, 0, -1, 1), (0, 1, -1, 1)])
    report = axiom_service.check_circuit_axioms(circuits, "weak")
    assert report.verdict == VerdictType.FAIL
    assert "C3'" in report.failed_tags()


def test_non_proportional_vectors_on_one_support(axiom_service, sign, make_circuits):
    circuits = make_circuits(sign, [(1, 1, 0), (1, -1, 0)])
    assert axiom_service.check_circuit_axioms(circuits, "weak").failed_tags() == ["C2"]
    with pytest.raises(InvalidInputError):
        axiom_service.underlying_matroid_of(circuits)


def test_nested_supports_fail_c2(axiom_service, krasner, make_circuits):
    circuits = make_circuits(krasner, [(1, 1, 0), (1, 1, 1)])
    assert "C2" in axiom_service.check_circuit_axioms(circuits, "strong").failed_tags()


def test_zero_vector_fails_c0(axiom_service, sign, make_circuits):
    circuits = make_circuits(sign, [(0, 0, 0), (1, -1, 0)])
    assert "C0" in axiom_service.check_circuit_axioms(circuits, "weak").failed_tags()


def test_supports_must_form_a_matroid(axiom_service, krasner, make_circuits):
    circuits = make_circuits(krasner, [(1, 1, 0), (0, 1, 1)])
    report = axiom_service.check_circuit_axioms(circuits, "weak")
    assert report.failed_tags() == ["C-support"]


def test_unknown_circuit_mode(axiom_service, oriented_u24):
    with pytest.raises(InvalidInputError):
        axiom_service.check_circuit_axioms(oriented_u24, "c4")


def test_underlying_matroid_of_triangle_example(axiom_service, gp_service, triangle_gp):
    circuits = gp_service.circuits_from_gp(triangle_gp)
    assert axiom_service.underlying_matroid_of(circuits) == MatroidService.uniform(3, 6)


@pytest.mark.parametrize("name", ["triangle-u36", "weissauer-phase", "oriented-u24", "regular-k4",
                                  "initial-k4"])
def test_strong_and_linear_combination_modes_agree(axiom_service, gp_service, example_service, name):
    circuits = gp_service.circuits_from_gp(example_service.get_example(name).builder())
    strong = axiom_service.check_circuit_axioms(circuits, "strong")
    c3pp = axiom_service.check_circuit_axioms(circuits, "c3pp")
    assert strong.passed == c3pp.passed
    assert axiom_service.check_circuit_axioms(circuits, "weak").passed


def test_weissauer_weak_checks_stay_within_tolerance(axiom_service, dual_pair_service, gp_service, weissauer_gp):
    circuits = gp_service.circuits_from_gp(weissauer_gp)
    check_tol = weissauer_gp.tract.check_tol
    weak = axiom_service.check_circuit_axioms(circuits, "weak")
    assert weak.passed, weak.to_dict()
    assert 0.0 <= weak.notes["max_deviation"] <= check_tol
    cocircuits = gp_service.circuits_from_gp(gp_service.dual_gp(weissauer_gp))
    pair = dual_pair_service.check_dual_pair(circuits, cocircuits, "weak")
    assert pair.passed, pair.to_dict()
    assert pair.notes["max_deviation"] <= check_tol
    assert not dual_pair_service.check_dual_pair(circuits, cocircuits, "strong").passed


def test_exact_tracts_carry_no_deviation(axiom_service, oriented_u24):
    assert "max_deviation" not in axiom_service.check_circuit_axioms(oriented_u24, "weak").notes


def test_krasner_uniform_circuits_are_strong(axiom_service, krasner_uniform):
    for rank, size in [(1, 3), (2, 4), (2, 5), (3, 5)]:
        assert axiom_service.check_circuit_axioms(krasner_uniform(rank, size), "strong").passed


def test_circuit_set_expands_unit_orbits(oriented_u24, registry):
    assert len(oriented_u24.all_vectors()) == 8
    tropical = registry.get_tract(TractType.TROPICAL.value)
    with pytest.raises(UnsupportedScaleError):
        CircuitSet(tropical, GroundSet(1), ()).all_vectors()


# ---------- 对偶对 ----------

@pytest.mark.parametrize("mode", ["weak", "strong"])
def test_oriented_dual_pair(dual_pair_service, oriented_u24, oriented_cocircuits, mode):
    assert dual_pair_service.check_dual_pair(oriented_u24, oriented_cocircuits, mode).verdict == VerdictType.PASS


def test_flipped_cocircuit_breaks_orthogonality(dual_pair_service, sign, oriented_u24, make_circuits):
    rows = [(1, 1, -1, 0)] + ORIENTED_U24_COCIRCUITS[1:]
    report = dual_pair_service.check_dual_pair(oriented_u24, make_circuits(sign, rows), "strong")
    assert set(report.failed_tags()) == {"DP3"}
    witnesses = [f.witness for f in report.failures]
    assert {"circuit": ["0", "1", "-1", "1"], "cocircuit": ["1", "1", "-1", "0"]} in witnesses
    weak = dual_pair_service.check_dual_pair(oriented_u24, make_circuits(sign, rows), "weak")
    assert "DP3'" in weak.failed_tags()


def test_cocircuit_supports_must_be_dual(dual_pair_service, sign, oriented_u24, make_circuits):
    report = dual_pair_service.check_dual_pair(oriented_u24, make_circuits(sign, [(1, 1, 0, 0)]), "weak")
    assert "DP2" in report.failed_tags()
    failure = next(f for f in report.failures if f.tag == "DP2")
    assert failure.witness["found"] == [["1", "2"]]


def test_invalid_signature_fails_dp1(dual_pair_service, sign, make_circuits, oriented_cocircuits):
    circuits = make_circuits(sign, [(1, 1, 0, 0), (1, -1, 0, 0)])
    assert "DP1" in dual_pair_service.check_dual_pair(circuits, oriented_cocircuits, "weak").failed_tags()


def test_krasner_dual_pairs(dual_pair_service, krasner_uniform):
    assert dual_pair_service.check_dual_pair(krasner_uniform(2, 4), krasner_uniform(2, 4), "strong").passed
    assert dual_pair_service.check_dual_pair(krasner_uniform(1, 3), krasner_uniform(2, 3), "strong").passed


def test_dual_pair_mismatches(dual_pair_service, oriented_u24, krasner_uniform, sign, make_circuits):
    with pytest.raises(MismatchError):
        dual_pair_service.check_dual_pair(oriented_u24, krasner_uniform(2, 4), "weak")
    with pytest.raises(MismatchError):
        dual_pair_service.check_dual_pair(oriented_u24, make_circuits(sign, [(1, -1, 0)]), "weak")
    with pytest.raises(InvalidInputError):
        dual_pair_service.check_dual_pair(oriented_u24, oriented_u24, "medium")


@pytest.mark.parametrize("strategy", ["dual_gp", "signature", "brute"])
def test_cocircuit_strategies_agree(dual_pair_service, oriented_u24, oriented_cocircuits, strategy):
    cocircuits = dual_pair_service.cocircuits_of(oriented_u24, strategy)
    assert cocircuits.is_projectively_equal(oriented_cocircuits)


@pytest.mark.parametrize("name", ["weissauer-phase", "triangle-u36", "regular-k4"])
def test_double_cocircuits_return_circuits(dual_pair_service, gp_service, example_service, name):
    circuits = gp_service.circuits_from_gp(example_service.get_example(name).builder())
    cocircuits = dual_pair_service.cocircuits_of(circuits, "signature")
    assert dual_pair_service.cocircuits_of(cocircuits, "signature").is_projectively_equal(circuits)


def test_cocircuit_strategy_errors(dual_pair_service, gp_service, oriented_u24, triangle_gp):
    with pytest.raises(InvalidInputError):
        dual_pair_service.cocircuits_of(oriented_u24, "guess")
    with pytest.raises(UnsupportedScaleError):
        dual_pair_service.cocircuits_of(gp_service.circuits_from_gp(triangle_gp), "brute")


# ---------- 子式与推出 ----------

def test_circuit_minors_of_u24(minor_service, sign, oriented_u24, make_circuits):
    deleted = minor_service.circuit_minor(oriented_u24, BitsetUtil.from_indices([3]), "delete")
    assert deleted.is_projectively_equal(make_circuits(sign, [(1, -1, 1)]))
    contracted = minor_service.circuit_minor(oriented_u24, BitsetUtil.from_indices([3]), "contract")
    assert contracted.is_projectively_equal(make_circuits(sign, [(1, -1, 0), (1, 0, -1), (0, 1, -1)]))


def test_circuit_minor_edge_cases(minor_service, oriented_u24):
    assert minor_service.circuit_minor(oriented_u24, 0, "contract") is oriented_u24
    with pytest.raises(InvalidInputError):
        minor_service.circuit_minor(oriented_u24, oriented_u24.ground.full, "delete")
    with pytest.raises(InvalidInputError):
        minor_service.circuit_minor(oriented_u24, 1, "project")


@pytest.mark.parametrize("name", ["oriented-u24", "regular-k4", "triangle-u36"])
def test_minors_commute_with_circuit_extraction(minor_service, gp_service, example_service, name):
    phi = example_service.get_example(name).builder()
    circuits = gp_service.circuits_from_gp(phi)
    for mask in range(1, phi.ground.full):
        for op in ("delete", "contract"):
            from_gp = gp_service.circuits_from_gp(gp_service.gp_minor(phi, mask, op))
            from_circuits = minor_service.circuit_minor(circuits, mask, op)
            assert from_gp.is_projectively_equal(from_circuits), (mask, op)


@pytest.mark.parametrize("source", ["oriented-u24", "regular-k4", "krasner-u24"])
def test_deletion_and_contraction_exchange_under_duality(minor_service, dual_pair_service, gp_service,
                                                         example_service, krasner_uniform, source):
    if source == "krasner-u24":
        circuits = krasner_uniform(2, 4)
    else:
        circuits = gp_service.circuits_from_gp(example_service.get_example(source).builder())
    cocircuits = dual_pair_service.cocircuits_of(circuits)
    for mask in range(1, circuits.ground.full):
        left = dual_pair_service.cocircuits_of(minor_service.circuit_minor(circuits, mask, "delete"))
        right = minor_service.circuit_minor(cocircuits, mask, "contract")
        assert left.is_projectively_equal(right), mask


def test_pushforward_to_krasner(minor_service, registry, oriented_u24, krasner_uniform):
    image = minor_service.pushforward_circuits(registry.get_hom("psi:sign"), oriented_u24)
    assert image.is_projectively_equal(krasner_uniform(2, 4))


def test_pushforward_requires_matching_source(minor_service, registry, oriented_u24):
    with pytest.raises(MismatchError):
        minor_service.pushforward_circuits(registry.get_hom("sigma"), oriented_u24)


@pytest.mark.parametrize("hom_id, source_id", [("sigma", TractType.RATIONAL.value),
                                               ("regular-to-gf3", TractType.REGULAR.value),
                                               ("initial:sign", TractType.INITIAL.value)])
def test_pushforward_commutes_with_circuit_extraction(minor_service, gp_service, realization_service,
                                                      registry, hom_id, source_id):
    hom = registry.get_hom(hom_id)
    matrix = [[1, 1, 1, 0, 0, 0], [-1, 0, 0, 1, 1, 0], [0, -1, 0, -1, 0, 1]]
    phi = realization_service.gp_from_matrix(registry.get_tract(source_id), matrix)
    left = gp_service.circuits_from_gp(gp_service.pushforward_gp(hom, phi))
    right = minor_service.pushforward_circuits(hom, gp_service.circuits_from_gp(phi))
    assert left.is_projectively_equal(right)
