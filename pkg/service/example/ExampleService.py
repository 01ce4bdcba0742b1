"""
内置示例目录
每个示例给出一个 GP 函数和期望的判定表，run_example 逐项比对
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

from dao.TractType import TractType
from service.axioms.CircuitAxiomService import CircuitAxiomService
from service.axioms.DualPairService import DualPairService
from service.gp.GPFunction import GPFunction
from service.gp.GPService import GPService
from service.realize.RealizationService import RealizationService
from service.tract.TractRegistry import TractRegistry
from service.vector.Vector import GroundSet
from util.ConfigUtil import ConfigUtil
from util.LogUtil import LogUtil
from util.TractException import UnknownNameError

logger = LogUtil.get_logger(__name__)

PASS, FAIL, ERROR = "pass", "fail", "error"

CHECKS = ("gp:weak", "gp:strong", "circuits:weak", "circuits:strong", "circuits:c3pp",
          "dual_pair:weak", "dual_pair:strong", "roundtrip:gp", "roundtrip:dual", "roundtrip:cocircuits")

_ALL_PASS = {check: PASS for check in CHECKS}
_WEAK_ONLY = {**_ALL_PASS, "gp:strong": FAIL, "circuits:strong": FAIL, "circuits:c3pp": FAIL,
              "dual_pair:strong": FAIL}

# K4 的全幺模表示，列依次为边 ab ac ad bc bd cd
_K4_MATRIX = [[1, 1, 1, 0, 0, 0],
              [-1, 0, 0, 1, 1, 0],
              [0, -1, 0, -1, 0, 1]]

_WEISSAUER_LABELS = ("x", "y", "z", "t", "l", "m")
_WEISSAUER_ANGLES = {
    "xyz": 0.0, "xyt": math.pi, "xzt": 0.0, "yzt": math.pi,
    "xyl": 0.9 + math.pi, "xzl": 2.5, "yzl": 5.5, "xtl": 2.7 + math.pi, "ytl": 5.8 - math.pi,
    "ztl": 0.3 + math.pi, "xym": 0.5 + math.pi, "xzm": 1.2, "yzm": 3.8, "xtm": 3.0 + math.pi,
    "ytm": 5.1 - math.pi, "ztm": 0.4 + math.pi, "xlm": 3.1, "ylm": 0.1, "zlm": 0.0, "tlm": 3.1,
}


@dataclass(frozen=True)
class ExampleEntry:
    name: str
    description: str
    builder: Callable[[], GPFunction]
    expected: Dict[str, str]
    # 强 GP 校验的失败项中必须出现的 (I, J)
    strong_witness: Optional[Dict[str, List[str]]] = None

    def describe(self) -> Dict:
        result = {"name": self.name, "description": self.description, "expected": dict(self.expected)}
        if self.strong_witness:
            result["strong_witness"] = self.strong_witness
        return result


class ExampleService:

    def __init__(self, tract_registry: Optional[TractRegistry] = None):
        self.tract_registry = tract_registry or TractRegistry()
        self.realization_service = RealizationService()
        self.gp_service = GPService()
        self.circuit_axiom_service = CircuitAxiomService()
        self.dual_pair_service = DualPairService()
        self.check_tol = ConfigUtil.load_phase_tol_from_config()["check_tol"]
        self.catalog: Dict[str, ExampleEntry] = {e.name: e for e in self._entries()}

    # ---------- 构造 ----------

    def _triangle_u36(self) -> GPFunction:
        tract = self.tract_registry.get_tract(TractType.TRIANGLE.value)
        values = {}
        for subset in combinations(range(6), 3):
            s = set(subset)
            if s == {0, 4, 5}:
                value = 4
            elif 0 in s and len(s & {1, 2, 3}) == 1 and len(s & {4, 5}) == 1:
                value = 2
            else:
                value = 1
            values[subset] = tract.element(Fraction(value))
        return GPFunction.of(tract, GroundSet(6), 3, values)

    def _weissauer_phase(self) -> GPFunction:
        tract = self.tract_registry.get_tract(TractType.PHASE.value, self.check_tol)
        index = {label: i for i, label in enumerate(_WEISSAUER_LABELS)}
        values = {tuple(index[c] for c in key): tract.element(angle) for key, angle in _WEISSAUER_ANGLES.items()}
        return GPFunction.of(tract, GroundSet(6, _WEISSAUER_LABELS), 3, values)

    def _oriented_u24(self) -> GPFunction:
        tract = self.tract_registry.get_tract(TractType.SIGN.value)
        return self.realization_service.gp_from_matrix(tract, [[1, 1, 1, 1], [1, 2, 3, 4]])

    def _k4(self, tract_id: str) -> GPFunction:
        tract = self.tract_registry.get_tract(tract_id)
        return self.realization_service.gp_from_matrix(tract, _K4_MATRIX)

    def _entries(self) -> Tuple[ExampleEntry, ...]:
        return (
            ExampleEntry("triangle-u36", "三角超域上秩 3 的 U3,6，取值 4/2/1",
                         self._triangle_u36, _WEAK_ONLY,
                         {"I": ["1", "2", "3", "4"], "J": ["5", "6"]}),
            ExampleEntry("weissauer-phase", "相位超域上的 21 值函数，标签 x,y,z,t,l,m",
                         self._weissauer_phase, _WEAK_ONLY,
                         {"I": ["x", "y", "z", "t"], "J": ["l", "m"]}),
            ExampleEntry("oriented-u24", "两行矩阵 (1,1,1,1),(1,2,3,4) 的定向 U2,4",
                         self._oriented_u24, _ALL_PASS),
            ExampleEntry("regular-k4", "全幺模矩阵给出的正则 M(K4)",
                         lambda: self._k4(TractType.REGULAR.value), _ALL_PASS),
            ExampleEntry("initial-k4", "初始 tract 上的 M(K4)，弱可表示但非强可表示",
                         lambda: self._k4(TractType.INITIAL.value), _WEAK_ONLY),
        )

    def list_examples(self) -> List[Dict]:
        return [entry.describe() for entry in self.catalog.values()]

    def get_example(self, name: str) -> ExampleEntry:
        if name not in self.catalog:
            raise UnknownNameError(f"未知的示例: {name}，可选: {', '.join(self.catalog)}")
        return self.catalog[name]

    # ---------- 运行 ----------

    @staticmethod
    def _verdict(passed: bool) -> str:
        return PASS if passed else FAIL

    def _observe(self, phi: GPFunction) -> Tuple[Dict[str, str], Dict[str, List]]:
        gp, axioms, dual_pairs = self.gp_service, self.circuit_axiom_service, self.dual_pair_service
        observed: Dict[str, str] = {}
        failures: Dict[str, List] = {}

        def run(check: str, action: Callable[[], object]) -> None:
            try:
                outcome = action()
            except ValueError as e:
                logger.warning("示例检查 %s 出错: %s", check, e)
                observed[check] = ERROR
                failures[check] = [{"error": str(e)}]
                return
            if isinstance(outcome, bool):
                observed[check] = self._verdict(outcome)
            else:
                observed[check] = self._verdict(outcome.passed)
                if outcome.failures:
                    failures[check] = [f.to_dict() for f in outcome.failures]

        for mode in ("weak", "strong"):
            run(f"gp:{mode}", lambda: gp.check_gp(phi, mode))
        circuits = gp.circuits_from_gp(phi)
        for mode in ("weak", "strong", "c3pp"):
            run(f"circuits:{mode}", lambda: axioms.check_circuit_axioms(circuits, mode))
        cocircuits = gp.circuits_from_gp(gp.dual_gp(phi))
        for mode in ("weak", "strong"):
            run(f"dual_pair:{mode}", lambda: dual_pairs.check_dual_pair(circuits, cocircuits, mode))
        run("roundtrip:gp", lambda: gp.is_equivalent(gp.gp_from_circuits(circuits), phi))
        run("roundtrip:dual", lambda: gp.is_equivalent(gp.dual_gp(gp.dual_gp(phi)), phi))
        run("roundtrip:cocircuits", lambda: dual_pairs.cocircuits_of(
            dual_pairs.cocircuits_of(circuits, "signature"), "signature").is_projectively_equal(circuits))
        return observed, failures

    def run_example(self, name: str) -> Tuple[int, Dict]:
        """
        构造示例，跑弱/强校验和往返检查，与期望判定表比对

        Returns:
            (退出码, 报告)，全部一致时退出码为 0，否则为 1

        Raises:
            UnknownNameError: 未知示例名
        """
        entry = self.get_example(name)
        logger.info("运行示例 %s", name)
        phi = entry.builder()
        observed, failures = self._observe(phi)
        mismatches = [check for check in CHECKS if observed.get(check) != entry.expected[check]]
        witness_found = None
        if entry.strong_witness is not None:
            witnesses = [f["witness"] for f in failures.get("gp:strong", [])]
            witness_found = entry.strong_witness in witnesses
            if not witness_found:
                mismatches.append("gp:strong:witness")
        report = {
            "example": name,
            "observed": observed,
            "expected": dict(entry.expected),
            "mismatches": mismatches,
            "failures": failures,
        }
        if witness_found is not None:
            report["strong_witness"] = {"expected": entry.strong_witness, "found": witness_found}
        logger.info("示例 %s 结束: 不一致 %d 项", name, len(mismatches))
        return (0 if not mismatches else 1), report

    def run_all(self) -> Tuple[int, List[Dict]]:
        reports = []
        exit_code = 0
        for name in self.catalog:
            code, report = self.run_example(name)
            exit_code = max(exit_code, code)
            reports.append(report)
        return exit_code, reports
