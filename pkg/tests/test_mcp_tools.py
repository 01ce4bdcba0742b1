import json

import pytest

pytest.importorskip("mcp")

from controller import McpServerController as tools  # noqa: E402
from conftest import ORIENTED_U24_CIRCUITS  # noqa: E402


def test_verify_tract_tool():
    assert tools.verify_tract("krasner")["verdict"] == "pass"
    assert "error" in tools.verify_tract("octonion")


def test_check_circuits_tool():
    payload = json.dumps({"tract": "sign", "ground_set": 4,
                          "circuits": [[str(x) for x in row] for row in ORIENTED_U24_CIRCUITS]})
    assert tools.check_circuits(payload, "weak")["verdict"] == "pass"
    assert "error" in tools.check_circuits("{broken")


def test_check_gp_tool_reports_strong_failure(example_service):
    from dao.jsonfile.MatroidJsonDAO import MatroidJsonDAO

    phi = example_service.get_example("triangle-u36").builder()
    payload = json.dumps(MatroidJsonDAO.dump_gp(phi))
    assert tools.check_gp(payload, "weak")["verdict"] == "pass"
    assert tools.check_gp(payload, "strong")["verdict"] == "fail"


def test_run_example_tool():
    result = tools.run_example("oriented-u24")
    assert result["exit_code"] == 0
    assert "error" in tools.run_example("fano")
