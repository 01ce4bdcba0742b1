import math
from fractions import Fraction

import pytest

from dao.jsonfile.MatroidJsonDAO import MatroidJsonDAO
from service.matroid.MatroidService import MatroidService
from service.vector.Vector import GroundSet
from util.TractException import InvalidElementError, InvalidInputError, UnknownNameError


@pytest.fixture(scope="module")
def dao(registry):
    return MatroidJsonDAO(registry)


def test_unsorted_keys_use_alternating_sign(dao, sign):
    phi = dao.parse_gp({"tract": "sign", "rank": 2, "ground_set": 3, "values": {"2,1": "1", "1,3": "-1"}})
    assert phi.items() == [((0, 1), sign.element(-1)), ((0, 2), sign.element(-1))]


def test_labels_in_keys(dao):
    data = {"tract": "pf:dyadic", "rank": 1, "ground_set": 2, "labels": ["a", "b"],
            "values": {"a": "2^3", "b": "-2^-1"}}
    phi = dao.parse_gp(data)
    assert phi.ground.labels == ("a", "b")
    assert [v.value for _, v in phi.items()] == [Fraction(8), Fraction(-1, 2)]
    dumped = MatroidJsonDAO.dump_gp(phi)
    assert dumped["labels"] == ["a", "b"]
    assert dumped["values"] == {"1": "2^3", "2": "-2^-1"}


def test_zero_literals_are_omitted(dao):
    phi = dao.parse_gp({"tract": "krasner", "rank": 1, "ground_set": 3, "values": {"1": "1", "2": "0"}})
    assert MatroidJsonDAO.dump_gp(phi)["values"] == {"1": "1"}


def test_phase_values_use_tolerance(dao):
    data = {"tract": "phase", "rank": 1, "ground_set": 1, "values": {"1": f"angle:{2 * math.pi - 1e-12}"}}
    phi = dao.parse_gp(data, tol=1e-6)
    assert phi.items()[0][1].value == 0.0
    assert phi.tract.tol == 1e-6


@pytest.mark.parametrize("data, error", [
    ({"rank": 1, "ground_set": 2, "values": {}}, InvalidInputError),
    ({"tract": "sign", "rank": 1, "ground_set": "2", "values": {}}, InvalidInputError),
    ({"tract": "sign", "rank": 2, "ground_set": 2, "values": {"1,1": "1"}}, InvalidInputError),
    ({"tract": "sign", "rank": 1, "ground_set": 2, "values": {"3": "1"}}, InvalidInputError),
    ({"tract": "sign", "rank": 1, "ground_set": 2, "values": {"z": "1"}}, InvalidInputError),
    ({"tract": "sign", "rank": 1, "ground_set": 2, "values": {"1": "2"}}, InvalidElementError),
    ({"tract": "sign", "rank": 2, "ground_set": 3, "values": {"1,2": "1", "2,1": "-1"}}, InvalidInputError),
    ({"tract": "krasner", "rank": 1, "ground_set": 2, "values": {"1": "1", " 1": "1"}}, InvalidInputError),
    ({"tract": "nope", "rank": 1, "ground_set": 2, "values": {}}, UnknownNameError),
])
def test_invalid_gp_files(dao, data, error):
    with pytest.raises(error):
        dao.parse_gp(data)


def test_circuit_file_round_trip(dao, oriented_u24):
    dumped = MatroidJsonDAO.dump_circuits(oriented_u24)
    assert dumped == {"tract": "sign", "ground_set": 4,
                      "circuits": [["1", "-1", "1", "0"], ["1", "-1", "0", "1"],
                                   ["1", "0", "-1", "1"], ["0", "1", "-1", "1"]]}
    assert dao.parse_circuits(dumped).is_projectively_equal(oriented_u24)


def test_circuit_rows_must_match_ground_set(dao):
    with pytest.raises(InvalidInputError):
        dao.parse_circuits({"tract": "sign", "ground_set": 3, "circuits": [["1", "-1"]]})


def test_matroid_files(dao):
    assert dao.parse_matroid({"builtin": "MK4"}) == MatroidService.mk4()
    data = {"ground_set": 3, "labels": ["p", "q", "r"], "circuits": [["p", "q"], [3]]}
    matroid = dao.parse_matroid(data)
    assert matroid.rank_value == 1
    assert MatroidJsonDAO.dump_matroid(matroid) == {"ground_set": 3, "labels": ["p", "q", "r"],
                                                    "circuits": [[3], [1, 2]]}


def test_parse_subset():
    ground = GroundSet(4, ("a", "b", "c", "d"))
    assert MatroidJsonDAO.parse_subset(ground, ["a", "4"]) == 0b1001
    with pytest.raises(InvalidInputError):
        MatroidJsonDAO.parse_subset(ground, ["e"])


def test_read_and_write_json(tmp_path):
    path = str(tmp_path / "m.json")
    MatroidJsonDAO.write_json(path, {"builtin": "U2,4"})
    assert MatroidJsonDAO.read_json(path) == {"builtin": "U2,4"}
    (tmp_path / "list.json").write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(InvalidInputError):
        MatroidJsonDAO.read_json(str(tmp_path / "list.json"))
