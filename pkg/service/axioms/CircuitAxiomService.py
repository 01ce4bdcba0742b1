"""
F-圈集的公理校验
weak 为模对消去 (C3)'，strong 为模族强消去 (C3)，c3pp 为基本圈线性组合条件 (C3)''
所有检查都在射影代表元上进行，缩放因子由 Lemma x + εy ∈ N ⟺ x = y 确定
"""
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence

from dao.jsonfile.ElementCodec import ElementCodec
from service.axioms.CircuitSet import CircuitSet
from service.common.AxiomReport import AxiomReport
from service.matroid.ClassicalMatroid import ClassicalMatroid
from service.matroid.MatroidService import MatroidService
from service.tract.FormalSum import FormalSum
from service.vector.Vector import Vector
from service.vector.VectorService import VectorService
from util.BitsetUtil import BitsetUtil
from util.LogUtil import LogUtil
from util.TractException import InvalidInputError, MatroidAxiomError

logger = LogUtil.get_logger(__name__)

CIRCUIT_MODES = ("weak", "strong", "c3pp")


class CircuitAxiomService:

    def __init__(self):
        self.matroid_service = MatroidService()
        self.vector_service = VectorService()

    def underlying_matroid_of(self, circuits: CircuitSet) -> ClassicalMatroid:
        """
        支撑构成的经典拟阵

        Raises:
            InvalidInputError: 圈集含零向量或同一支撑有多个射影类
            MatroidAxiomError: 支撑不是拟阵的圈族
        """
        supports = circuits.supports()
        if 0 in supports:
            raise InvalidInputError("圈集含零向量")
        if len(set(supports)) != len(supports):
            raise InvalidInputError("同一支撑上有多个射影类")
        return self.matroid_service.matroid_from_circuits(circuits.ground, supports)

    def _vector_witness(self, circuits: CircuitSet, x: Vector) -> Dict:
        return {"vector": ElementCodec.format_vector(circuits.tract.tract_id, x),
                "support": circuits.ground.names(x.support)}

    def check_basic_axioms(self, circuits: CircuitSet, report: AxiomReport) -> Optional[ClassicalMatroid]:
        """(C0)–(C2) 与支撑拟阵，失败时返回 None"""
        reps = circuits.reps
        report.notes["C1"] = "closed under unit scaling by construction"
        report.checked += 1
        zero = [x for x in reps if x.is_zero]
        if zero:
            report.add_failure("C0", {"vector": ElementCodec.format_vector(circuits.tract.tract_id, zero[0])})
        nonzero = [x for x in reps if not x.is_zero]
        for x, y in combinations(nonzero, 2):
            report.checked += 1
            if x.support == y.support:
                report.add_failure("C2", {"pair": [self._vector_witness(circuits, x),
                                                   self._vector_witness(circuits, y)],
                                          "reason": "同一支撑上的向量不成比例"})
            elif BitsetUtil.is_subset(x.support, y.support) or BitsetUtil.is_subset(y.support, x.support):
                report.add_failure("C2", {"pair": [self._vector_witness(circuits, x),
                                                   self._vector_witness(circuits, y)],
                                          "reason": "支撑之间存在包含关系"})
        if report.failures:
            return None
        try:
            return self.matroid_service.matroid_from_circuits(circuits.ground, [x.support for x in nonzero])
        except MatroidAxiomError as e:
            report.add_failure("C-support", e.witness)
            return None

    def find_eliminations(self, circuits: CircuitSet, family: Sequence[Vector], forbidden: int,
                          limit: int = 2, report: Optional[AxiomReport] = None,
                          weak: bool = False) -> List[Vector]:
        """
        在圈集中找 Z：Z 在 forbidden 上为 0，且每个位置 Σ family(f) - Z(f) 为零和
        Z 的缩放由某个只有一个 family 向量非零的位置确定；找到 limit 个即停止
        weak 为真时按弱模式判定零和，给出 report 时顺带记录偏差
        """
        judge = report if report is not None else AxiomReport(mode="weak" if weak else "strong")
        tract = circuits.tract
        union = 0
        for v in family:
            union |= v.support
        allowed = union & ~forbidden
        matches: List[Vector] = []
        for candidate in circuits.reps:
            if candidate.is_zero or not BitsetUtil.is_subset(candidate.support, allowed):
                continue
            scales = []
            for f in BitsetUtil.to_indices(candidate.support):
                nonzero = [v[f] for v in family if not v[f].is_zero]
                if len(nonzero) == 1:
                    scales = [tract.div(nonzero[0], candidate[f])]
                    break
            if not scales:
                units = tract.unit_elements()
                if units is None:
                    continue
                scales = units
            for gamma in scales:
                z = candidate.scale(gamma)
                residuals = (FormalSum.of_elements([v[f] for v in family] + [tract.negate(z[f])])
                             for f in range(circuits.ground.size))
                if all(judge.accepts(tract, s, weak) for s in residuals):
                    matches.append(z)
                    break
            if len(matches) >= limit:
                break
        return matches

    def _record_elimination(self, circuits: CircuitSet, report: AxiomReport, tag: str,
                            family: Sequence[Vector], eliminated: Sequence[int]) -> None:
        forbidden = BitsetUtil.from_indices(eliminated)
        report.checked += 1
        matches = self.find_eliminations(circuits, family, forbidden, report=report, weak=tag == "C3'")
        if len(matches) == 1:
            return
        witness = {
            "family": [self._vector_witness(circuits, v) for v in family],
            "eliminated": circuits.ground.names(eliminated),
        }
        if not matches:
            report.add_failure(tag, witness)
        else:
            witness["matches"] = [self._vector_witness(circuits, z) for z in matches]
            report.add_failure("inconsistency", witness)

    def _check_weak(self, circuits: CircuitSet, matroid: ClassicalMatroid, report: AxiomReport) -> None:
        tract = circuits.tract
        for x, y in combinations(circuits.reps, 2):
            if matroid.nullity(x.support | y.support) != 2:
                continue
            for e in BitsetUtil.to_indices(x.support & y.support):
                # 缩放 Y 使 X(e) = -Y(e)
                scaled = y.scale(tract.negate(tract.div(x[e], y[e])))
                self._record_elimination(circuits, report, "C3'", [x, scaled], [e])

    def _check_strong(self, circuits: CircuitSet, matroid: ClassicalMatroid, report: AxiomReport) -> None:
        tract = circuits.tract
        reps = list(circuits.reps)
        max_family = matroid.nullity(circuits.ground.full) - 1
        for x in reps:
            others = [y for y in reps if y is not x]
            for k in range(1, max_family + 1):
                for family in combinations(others, k):
                    union = 0
                    for y in family:
                        union |= y.support
                    if BitsetUtil.is_subset(x.support, union):
                        continue
                    if matroid.nullity(union | x.support) != k + 1:
                        continue
                    choices = []
                    for i, xi in enumerate(family):
                        rest = 0
                        for j, xj in enumerate(family):
                            if j != i:
                                rest |= xj.support
                        candidates = x.support & xi.support & ~rest
                        if candidates == 0:
                            break
                        choices.append(BitsetUtil.to_indices(candidates))
                    else:
                        for eliminated in product(*choices):
                            scaled = [xi.scale(tract.negate(tract.div(x[e], xi[e])))
                                      for xi, e in zip(family, eliminated)]
                            self._record_elimination(circuits, report, "C3", [x] + scaled, eliminated)

    def _check_c3pp(self, circuits: CircuitSet, matroid: ClassicalMatroid, report: AxiomReport) -> None:
        tract = circuits.tract
        by_support = circuits.support_map()
        for basis in matroid.bases:
            gens: Dict[int, Vector] = {}
            for e in BitsetUtil.to_indices(circuits.ground.full & ~basis):
                g = by_support[self.matroid_service.fundamental_circuit(matroid, basis, e)]
                gens[e] = g.scale(tract.inverse(g[e]))
            for x in circuits.reps:
                coeffs = {e: x[e] for e in gens}
                residuals = self.vector_service.combination_residual(x, coeffs, gens)
                report.checked += 1
                for f, s in enumerate(residuals):
                    if not report.accepts(tract, s):
                        witness = self._vector_witness(circuits, x)
                        witness.update({"basis": circuits.ground.names(basis), "f": circuits.ground.labels[f]})
                        report.add_failure("C3''", witness, ElementCodec.format_sum(tract.tract_id, s))
                        break

    def check_circuit_axioms(self, circuits: CircuitSet, mode: str) -> AxiomReport:
        """
        先校验 (C0)–(C2) 和支撑拟阵，再按模式校验消去公理
        支撑不是拟阵时报告 C-support 并跳过消去检查
        """
        if mode not in CIRCUIT_MODES:
            raise InvalidInputError(f"未知的模式: {mode}")
        logger.info("校验圈公理: tract=%s m=%d 圈数=%d mode=%s",
                    circuits.tract.tract_id, circuits.ground.size, len(circuits), mode)
        report = AxiomReport(mode=mode)
        if circuits.tract.numeric:
            report.notes["max_deviation"] = 0.0
        matroid = self.check_basic_axioms(circuits, report)
        if matroid is None:
            return report
        if mode == "weak":
            self._check_weak(circuits, matroid, report)
        elif mode == "strong":
            self._check_strong(circuits, matroid, report)
        else:
            self._check_c3pp(circuits, matroid, report)
        logger.info("圈公理校验结束: %s, 失败 %d 项", report.verdict.value, len(report.failures))
        return report
