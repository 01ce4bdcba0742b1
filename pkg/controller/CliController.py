"""
命令行入口
报告 JSON 写到 stdout，日志写到 stderr
退出码：0 通过，1 校验失败并给出见证，2 输入或用法错误
"""
import argparse
import json
import os
import sys
from typing import Any, Dict, List, Optional, Tuple

# 添加项目根目录到 Python 路径
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from dao.jsonfile.MatroidJsonDAO import MatroidJsonDAO
from service.axioms.CircuitAxiomService import CIRCUIT_MODES, CircuitAxiomService
from service.axioms.CircuitMinorService import CircuitMinorService
from service.axioms.DualPairService import COCIRCUIT_STRATEGIES, DUAL_PAIR_MODES, DualPairService
from service.axioms.PerfectnessService import PerfectnessService
from service.common.AxiomReport import AxiomReport
from service.example.ExampleService import ExampleService
from service.gp.GPService import GP_MODES, MINOR_OPS, GPService
from service.tract.TractRegistry import TractRegistry
from service.tract.TractVerifyService import CheckBudget, TractVerifyService
from util.ConfigUtil import ConfigUtil
from util.LogUtil import LogUtil
from util.TractException import InvalidInputError, NotRepresentableError

logger = LogUtil.get_logger(__name__)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _hex_seed(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"种子必须是十六进制数: {text}")


def _subset_tokens(text: str) -> List[str]:
    return [t for t in text.split(",") if t.strip()]


class CliController:

    def __init__(self, tol: Optional[float] = None, seed: Optional[int] = None):
        self.tol = tol if tol is not None else ConfigUtil.load_phase_tol_from_config()["check_tol"]
        self.tract_registry = TractRegistry(phase_tol=self.tol, check_tol=self.tol)
        self.json_dao = MatroidJsonDAO(self.tract_registry)
        self.tract_verify_service = TractVerifyService(CheckBudget.from_config(seed=seed))
        self.gp_service = GPService()
        self.circuit_axiom_service = CircuitAxiomService()
        self.circuit_minor_service = CircuitMinorService()
        self.dual_pair_service = DualPairService()
        self.perfectness_service = PerfectnessService()
        self.example_service = ExampleService(self.tract_registry)

    @staticmethod
    def _report(report: AxiomReport, **extra) -> Tuple[int, Dict[str, Any]]:
        return report.verdict.exit_code(), {**extra, **report.to_dict()}

    # ---------- tract ----------

    def tract_verify(self, args) -> Tuple[int, Dict]:
        tract = self.tract_registry.get_tract(args.tract)
        return self._report(self.tract_verify_service.verify_tract_axioms(tract), tract=tract.tract_id)

    def tract_ddcheck(self, args) -> Tuple[int, Dict]:
        tract = self.tract_registry.get_tract(args.tract)
        return self._report(self.tract_verify_service.is_doubly_distributive(tract), tract=tract.tract_id)

    def tract_hom(self, args) -> Tuple[int, Dict]:
        hom = self.tract_registry.get_hom(args.hom)
        return self._report(self.tract_verify_service.verify_hom(hom), hom=hom.hom_id)

    def tract_list(self, args) -> Tuple[int, Dict]:
        return EXIT_PASS, {"tracts": self.tract_registry.list_tracts(), "homs": self.tract_registry.list_homs()}

    # ---------- gp ----------

    def gp_check(self, args) -> Tuple[int, Dict]:
        phi = self.json_dao.load_gp(args.input)
        return self._report(self.gp_service.check_gp(phi, args.mode), tract=phi.tract.tract_id)

    def gp_circuits(self, args) -> Tuple[int, Dict]:
        circuits = self.gp_service.circuits_from_gp(self.json_dao.load_gp(args.input))
        return EXIT_PASS, self.json_dao.dump_circuits(circuits)

    def gp_dual(self, args) -> Tuple[int, Dict]:
        phi = self.json_dao.load_gp(args.input)
        return EXIT_PASS, self.json_dao.dump_gp(self.gp_service.dual_gp(phi))

    def gp_minor(self, args) -> Tuple[int, Dict]:
        phi = self.json_dao.load_gp(args.input)
        mask = MatroidJsonDAO.parse_subset(phi.ground, _subset_tokens(args.set))
        return EXIT_PASS, self.json_dao.dump_gp(self.gp_service.gp_minor(phi, mask, args.op))

    def gp_reconstruct(self, args) -> Tuple[int, Dict]:
        circuits = self.json_dao.load_circuits(args.input)
        try:
            phi = self.gp_service.gp_from_circuits(circuits)
        except NotRepresentableError as e:
            return EXIT_FAIL, {"verdict": "fail", "reason": str(e), "witness": e.witness}
        return EXIT_PASS, self.json_dao.dump_gp(phi)

    # ---------- matroid ----------

    def matroid_check_circuits(self, args) -> Tuple[int, Dict]:
        circuits = self.json_dao.load_circuits(args.input)
        return self._report(self.circuit_axiom_service.check_circuit_axioms(circuits, args.mode),
                            tract=circuits.tract.tract_id)

    def matroid_cocircuits(self, args) -> Tuple[int, Dict]:
        circuits = self.json_dao.load_circuits(args.input)
        cocircuits = self.dual_pair_service.cocircuits_of(circuits, args.strategy)
        return EXIT_PASS, self.json_dao.dump_circuits(cocircuits)

    def matroid_dual_pair(self, args) -> Tuple[int, Dict]:
        circuits = self.json_dao.load_circuits(args.input)
        cocircuits = self.json_dao.load_circuits(args.dual)
        return self._report(self.dual_pair_service.check_dual_pair(circuits, cocircuits, args.mode),
                            tract=circuits.tract.tract_id)

    def matroid_minor(self, args) -> Tuple[int, Dict]:
        circuits = self.json_dao.load_circuits(args.input)
        mask = MatroidJsonDAO.parse_subset(circuits.ground, _subset_tokens(args.set))
        return EXIT_PASS, self.json_dao.dump_circuits(
            self.circuit_minor_service.circuit_minor(circuits, mask, args.op))

    def matroid_pushforward(self, args) -> Tuple[int, Dict]:
        hom = self.tract_registry.get_hom(args.hom)
        circuits = self.json_dao.load_circuits(args.input)
        return EXIT_PASS, self.json_dao.dump_circuits(
            self.circuit_minor_service.pushforward_circuits(hom, circuits))

    def matroid_perfectness(self, args) -> Tuple[int, Dict]:
        circuits = self.json_dao.load_circuits(args.input)
        return self._report(self.perfectness_service.perfectness_probe(circuits), tract=circuits.tract.tract_id)

    # ---------- 枚举与示例 ----------

    def enumerate(self, args) -> Tuple[int, Dict]:
        tract = self.tract_registry.get_tract(args.tract)
        extra = {}
        if args.matroid is not None:
            # 给定支撑拟阵时只枚举其上的函数
            matroid = self.json_dao.load_matroid(args.matroid)
            rank, size = matroid.rank_value, matroid.size
            records = self.perfectness_service.enumerate_on_matroid(tract, matroid)
            extra["matroid"] = self.json_dao.dump_matroid(matroid)
        elif args.rank is None or args.elements is None:
            raise InvalidInputError("需要 --rank 与 --elements，或者 --matroid")
        else:
            rank, size = args.rank, args.elements
            records = self.perfectness_service.enumerate_gp(tract, rank, size)
        functions = []
        matroids = set()
        for record in records:
            matroids.add(record.bases)
            functions.append({"strong": record.strong, **self.json_dao.dump_gp(record.phi)})
        return EXIT_PASS, {
            "tract": tract.tract_id,
            "rank": rank,
            "ground_set": size,
            "matroids": len(matroids),
            "weak": len(functions),
            "strong": sum(1 for f in functions if f["strong"]),
            "functions": functions,
            **extra,
        }

    def examples_run(self, args) -> Tuple[int, Any]:
        if args.name == "all":
            return self.example_service.run_all()
        return self.example_service.run_example(args.name)

    def examples_list(self, args) -> Tuple[int, Any]:
        return EXIT_PASS, self.example_service.list_examples()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="相位超域容差，默认取 config.yaml 的 phase.check_tol")
    common.add_argument("--seed", type=_hex_seed, default=None, help="抽样种子（十六进制），默认 0xB0B1")
    common.add_argument("--json", action="store_true", help="输出单行 JSON")

    parser = argparse.ArgumentParser(prog="tract-matroid", description="tract 上的拟阵：公理校验、构造与示例")
    groups = parser.add_subparsers(dest="group", required=True)

    def command(subparsers, name: str, handler: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    tract = groups.add_parser("tract", help="tract 公理与同态").add_subparsers(dest="command", required=True)
    command(tract, "verify", "tract_verify", "校验 tract 公理").add_argument("--tract", required=True)
    command(tract, "ddcheck", "tract_ddcheck", "双分配律").add_argument("--tract", required=True)
    command(tract, "hom", "tract_hom", "校验同态").add_argument("--hom", required=True)
    command(tract, "list", "tract_list", "列出内置 tract 与同态")

    gp = groups.add_parser("gp", help="Grassmann–Plücker 函数").add_subparsers(dest="command", required=True)
    sub = command(gp, "check", "gp_check", "校验 GP 公理")
    sub.add_argument("--input", required=True)
    sub.add_argument("--mode", choices=GP_MODES, default="strong")
    command(gp, "circuits", "gp_circuits", "由 GP 函数求圈").add_argument("--input", required=True)
    command(gp, "dual", "gp_dual", "对偶 GP 函数").add_argument("--input", required=True)
    sub = command(gp, "minor", "gp_minor", "GP 子式")
    sub.add_argument("--input", required=True)
    sub.add_argument("--set", required=True, help="逗号分隔的元素")
    sub.add_argument("--op", choices=MINOR_OPS, required=True)
    command(gp, "reconstruct", "gp_reconstruct", "由圈集重构 GP 函数").add_argument("--input", required=True)

    matroid = groups.add_parser("matroid", help="圈集").add_subparsers(dest="command", required=True)
    sub = command(matroid, "check-circuits", "matroid_check_circuits", "校验圈公理")
    sub.add_argument("--input", required=True)
    sub.add_argument("--mode", choices=CIRCUIT_MODES, default="strong")
    sub = command(matroid, "cocircuits", "matroid_cocircuits", "求余圈")
    sub.add_argument("--input", required=True)
    sub.add_argument("--strategy", choices=COCIRCUIT_STRATEGIES, default="dual_gp")
    sub = command(matroid, "dual-pair", "matroid_dual_pair", "校验对偶对")
    sub.add_argument("--input", required=True)
    sub.add_argument("--dual", required=True, help="余圈集文件")
    sub.add_argument("--mode", choices=DUAL_PAIR_MODES, default="strong")
    sub = command(matroid, "minor", "matroid_minor", "圈集子式")
    sub.add_argument("--input", required=True)
    sub.add_argument("--set", required=True, help="逗号分隔的元素")
    sub.add_argument("--op", choices=MINOR_OPS, required=True)
    sub = command(matroid, "pushforward", "matroid_pushforward", "沿同态推出")
    sub.add_argument("--input", required=True)
    sub.add_argument("--hom", required=True)
    command(matroid, "perfectness", "matroid_perfectness", "向量与余向量正交性探针").add_argument(
        "--input", required=True)

    sub = groups.add_parser("enumerate", parents=[common], help="枚举有限 tract 上的 GP 函数")
    sub.set_defaults(handler="enumerate")
    sub.add_argument("--tract", required=True)
    sub.add_argument("--rank", type=int)
    sub.add_argument("--elements", type=int)
    sub.add_argument("--matroid", help="支撑拟阵文件，给出时忽略 --rank 与 --elements")

    examples = groups.add_parser("examples", help="内置示例").add_subparsers(dest="command", required=True)
    command(examples, "run", "examples_run", "运行示例").add_argument("name", help="示例名或 all")
    command(examples, "list", "examples_list", "列出示例")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    LogUtil.configure(ConfigUtil.load_log_level_from_config())
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS
    try:
        controller = CliController(tol=args.tol, seed=args.seed)
        exit_code, payload = getattr(controller, args.handler)(args)
    except ValueError as e:
        logger.error("%s", e)
        print(json.dumps({"error": str(e), "witness": getattr(e, "witness", {})}, ensure_ascii=False))
        return EXIT_USAGE
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True, separators=(",", ":")))
    else:
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    return exit_code


if __name__ == '__main__':
    sys.exit(main())
