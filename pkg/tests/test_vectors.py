import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dao.TractType import TractType
from service.tract.FormalSum import FormalSum
from service.tract.HyperfieldTracts import SignTract
from service.tract.TractElement import TractElement, ZERO
from service.vector.Vector import GroundSet, Vector, zero_vector
from service.vector.VectorService import VectorService
from util.TractException import InvalidInputError, MismatchError, UnsupportedScaleError
from conftest import ORIENTED_U24_CIRCUITS


def test_inner_product_over_common_support(sign, make_vector):
    x = make_vector(sign, 1, -1, 1, 0)
    y = make_vector(sign, 1, 1, 1, 1)
    assert VectorService.inner_product(x, y) == FormalSum.from_counts({1: 2, -1: 1})
    assert VectorService.is_orthogonal(x, y)


def test_disjoint_supports_are_orthogonal(sign, make_vector):
    x = make_vector(sign, 1, 0, 0)
    y = make_vector(sign, 0, 1, -1)
    assert VectorService.inner_product(x, y).is_empty()
    assert VectorService.is_orthogonal(x, y)


def test_phase_inner_product_conjugates_second_argument(registry):
    phase = registry.get_tract(TractType.PHASE.value)
    x = Vector(phase, (phase.element(math.pi / 2),))
    assert VectorService.inner_product(x, x) == FormalSum.of([0.0])
    assert not VectorService.is_orthogonal(x, x)


def test_mismatched_vectors_raise(sign, krasner, make_vector):
    with pytest.raises(MismatchError):
        VectorService.inner_product(make_vector(sign, 1, 1), make_vector(sign, 1, 1, 1))
    with pytest.raises(MismatchError):
        VectorService.inner_product(make_vector(sign, 1, 1), make_vector(krasner, 1, 1))


def test_projective_scalar(sign, make_vector):
    x = make_vector(sign, 1, -1, 1, 0)
    assert VectorService.projective_scalar(x, make_vector(sign, -1, 1, -1, 0)) == TractElement(-1)
    assert VectorService.projective_scalar(x, make_vector(sign, 1, 1, 1, 0)) is None
    assert VectorService.projective_scalar(x, make_vector(sign, 1, -1, 0, 1)) is None
    with pytest.raises(InvalidInputError):
        VectorService.projective_scalar(x, zero_vector(sign, 4))


def test_normalized_scales_first_coordinate_to_one(sign, make_vector):
    assert make_vector(sign, 0, -1, 1).normalized() == make_vector(sign, 0, 1, -1)


def test_supp_min_drops_zero_and_non_minimal(sign, make_vector):
    vectors = [make_vector(sign, 1, 1, 0), make_vector(sign, 1, 0, 0),
               zero_vector(sign, 3), make_vector(sign, 0, 1, 1)]
    assert VectorService.supp_min(vectors) == [make_vector(sign, 1, 0, 0), make_vector(sign, 0, 1, 1)]


def test_combination_residual_of_circuit(sign, make_vector):
    x = make_vector(sign, 1, -1, 1, 0)
    gens = {0: make_vector(sign, 1, 0, -1, 1), 1: make_vector(sign, 0, 1, -1, 1)}
    coeffs = {0: sign.one, 1: sign.epsilon}
    residuals = VectorService.combination_residual(x, coeffs, gens)
    assert len(residuals) == 4
    assert all(sign.is_null(s) for s in residuals)


def test_combination_residual_detects_wrong_coefficient(sign, make_vector):
    x = make_vector(sign, 1, -1, 1, 0)
    gens = {0: make_vector(sign, 1, 0, -1, 1), 1: make_vector(sign, 0, 1, -1, 1)}
    residuals = VectorService.combination_residual(x, {0: sign.one, 1: sign.one}, gens)
    assert not sign.is_null(residuals[1])


def test_combination_residual_requires_matching_keys(sign, make_vector):
    with pytest.raises(MismatchError):
        VectorService.combination_residual(make_vector(sign, 1, 1), {0: sign.one},
                                           {1: make_vector(sign, 1, 0)})


def test_brute_force_cocircuits_of_oriented_u24(sign, make_vector):
    circuits = [make_vector(sign, *row) for row in ORIENTED_U24_CIRCUITS]
    minimal = VectorService().brute_force_perp_suppmin(sign, 4, circuits)
    assert len(minimal) == 8
    normalized = {v.normalized() for v in minimal}
    assert normalized == {make_vector(sign, 1, 1, 1, 0), make_vector(sign, 1, 1, 0, -1),
                          make_vector(sign, 1, 0, -1, -1), make_vector(sign, 0, 1, 1, 1)}


def test_brute_force_respects_caps(registry, sign):
    service = VectorService({"max_tract_size": 4, "max_elements": 3})
    with pytest.raises(UnsupportedScaleError):
        service.brute_force_perp_suppmin(sign, 4, [])
    with pytest.raises(UnsupportedScaleError):
        service.brute_force_perp_suppmin(registry.get_tract(TractType.TROPICAL.value), 2, [])
    service.check_brute_force_scale(registry.get_tract(TractType.GF3.value), 3)
    with pytest.raises(UnsupportedScaleError):
        service.check_brute_force_scale(registry.get_tract(TractType.RATIONAL.value), 2)


def test_all_vectors_counts(krasner):
    assert len(list(VectorService.all_vectors(krasner, 3))) == 8


@pytest.mark.parametrize("size, labels", [(0, ()), (17, ()), (2, ("a", "a")), (3, ("a", "b"))])
def test_invalid_ground_sets(size, labels):
    with pytest.raises(InvalidInputError):
        GroundSet(size, labels)


def test_ground_set_defaults_and_removal():
    ground = GroundSet(4)
    assert ground.labels == ("1", "2", "3", "4")
    smaller, keep = ground.remove(0b0101)
    assert smaller.labels == ("2", "4")
    assert keep == (1, 3)
    assert ground.names(0b1001) == ["1", "4"]


_signs = st.sampled_from([0, 1, -1])


@settings(max_examples=300, derandomize=True)
@given(st.lists(_signs, min_size=4, max_size=4), st.lists(_signs, min_size=4, max_size=4),
       st.sampled_from([1, -1]))
def test_orthogonality_is_invariant_under_rescaling(left, right, g):
    sign = SignTract()
    x = Vector(sign, tuple(ZERO if p == 0 else TractElement(p) for p in left))
    y = Vector(sign, tuple(ZERO if p == 0 else TractElement(p) for p in right))
    assert VectorService.is_orthogonal(x, y) == VectorService.is_orthogonal(x.scale(TractElement(g)), y)
    assert VectorService.is_orthogonal(x, y) == VectorService.is_orthogonal(y, x)
