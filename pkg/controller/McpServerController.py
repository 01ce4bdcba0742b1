import json
import os
import sys

# 添加项目根目录到 Python 路径
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from mcp.server.fastmcp import FastMCP

from dao.jsonfile.MatroidJsonDAO import MatroidJsonDAO
from service.axioms.CircuitAxiomService import CircuitAxiomService
from service.example.ExampleService import ExampleService
from service.gp.GPService import GPService
from service.tract.TractRegistry import TractRegistry
from service.tract.TractVerifyService import TractVerifyService
from util.ConfigUtil import ConfigUtil
from util.LogUtil import LogUtil

mcp = FastMCP("tract-matroid")

_check_tol = ConfigUtil.load_phase_tol_from_config()["check_tol"]
tract_registry = TractRegistry(phase_tol=_check_tol, check_tol=_check_tol)
json_dao = MatroidJsonDAO(tract_registry)
tract_verify_service = TractVerifyService()
gp_service = GPService()
circuit_axiom_service = CircuitAxiomService()
example_service = ExampleService(tract_registry)


def _error(e: ValueError) -> dict:
    return {"error": str(e), "witness": getattr(e, "witness", {})}


@mcp.tool(
    name="verify_tract",
    description="校验内置 tract 的公理，参数为 tract 标识，如 sign、phase、field:gf3"
)
def verify_tract(tract_id: str) -> dict:
    try:
        tract = tract_registry.get_tract(tract_id)
        return tract_verify_service.verify_tract_axioms(tract).to_dict()
    except ValueError as e:
        return _error(e)


@mcp.tool(
    name="check_gp",
    description="校验 GP 函数，payload 为 GP 文件的 JSON 字符串，mode 为 weak 或 strong"
)
def check_gp(payload: str, mode: str = "strong") -> dict:
    try:
        phi = json_dao.parse_gp(json.loads(payload))
        return gp_service.check_gp(phi, mode).to_dict()
    except json.JSONDecodeError as e:
        return {"error": f"JSON 格式错误: {e}"}
    except ValueError as e:
        return _error(e)


@mcp.tool(
    name="check_circuits",
    description="校验圈公理，payload 为圈集文件的 JSON 字符串，mode 为 weak、strong 或 c3pp"
)
def check_circuits(payload: str, mode: str = "strong") -> dict:
    try:
        circuits = json_dao.parse_circuits(json.loads(payload))
        return circuit_axiom_service.check_circuit_axioms(circuits, mode).to_dict()
    except json.JSONDecodeError as e:
        return {"error": f"JSON 格式错误: {e}"}
    except ValueError as e:
        return _error(e)


@mcp.tool(
    name="run_example",
    description="运行内置示例：triangle-u36、weissauer-phase、oriented-u24、regular-k4、initial-k4"
)
def run_example(name: str) -> dict:
    try:
        exit_code, report = example_service.run_example(name)
        return {"exit_code": exit_code, **report}
    except ValueError as e:
        return _error(e)


if __name__ == '__main__':
    LogUtil.configure(ConfigUtil.load_log_level_from_config())
    mcp.run(transport="stdio")
