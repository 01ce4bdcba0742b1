"""
对偶对的校验与余圈的构造
余圈有三种算法：经 GP 函数对偶、按签名公式直接构造、有限 tract 暴力枚举
"""
from itertools import combinations
from typing import Callable, Dict, List

from dao.jsonfile.ElementCodec import ElementCodec
from service.axioms.CircuitAxiomService import CircuitAxiomService
from service.axioms.CircuitSet import CircuitSet
from service.common.AxiomReport import AxiomReport
from service.gp.GPService import GPService
from service.matroid.MatroidService import MatroidService
from service.tract.TractElement import ZERO
from service.vector.Vector import Vector
from service.vector.VectorService import VectorService
from util.BitsetUtil import BitsetUtil
from util.LogUtil import LogUtil
from util.TractException import (InconsistencyError, InvalidInputError, MatroidAxiomError,
                                 MismatchError, UnsupportedScaleError)

logger = LogUtil.get_logger(__name__)

DUAL_PAIR_MODES = ("weak", "strong")
COCIRCUIT_STRATEGIES = ("dual_gp", "signature", "brute")


class DualPairService:

    def __init__(self):
        self.matroid_service = MatroidService()
        self.vector_service = VectorService()
        self.gp_service = GPService()
        self.circuit_axiom_service = CircuitAxiomService()

    def _signature_matroid(self, circuits: CircuitSet, tag: str, report: AxiomReport):
        """F-签名：无零向量、每个支撑恰好一个射影类、支撑构成拟阵的圈族"""
        try:
            return self.circuit_axiom_service.underlying_matroid_of(circuits)
        except (InvalidInputError, MatroidAxiomError) as e:
            report.add_failure(tag, {"reason": str(e), **e.witness})
            return None

    def check_dual_pair(self, circuits: CircuitSet, cocircuits: CircuitSet, mode: str) -> AxiomReport:
        """
        (DP1) C 是某拟阵 M 的 F-签名，(DP2) D 是 M* 的 F-签名，
        (DP3) C ⊥ D；weak 模式只要求支撑交不超过 3 个元素的对正交
        """
        if mode not in DUAL_PAIR_MODES:
            raise InvalidInputError(f"未知的模式: {mode}")
        if circuits.tract.tract_id != cocircuits.tract.tract_id:
            raise MismatchError("圈集与余圈集的 tract 不一致")
        if circuits.ground.size != cocircuits.ground.size:
            raise MismatchError("圈集与余圈集的基础集不一致")
        logger.info("校验对偶对: tract=%s mode=%s", circuits.tract.tract_id, mode)
        report = AxiomReport(mode=mode)
        if circuits.tract.numeric:
            report.notes["max_deviation"] = 0.0
        report.checked += 2
        matroid = self._signature_matroid(circuits, "DP1", report)
        dual = self._signature_matroid(cocircuits, "DP2", report)
        if matroid is not None and dual is not None:
            expected = self.matroid_service.dual_matroid(matroid)
            if expected.circuits != dual.circuits:
                report.add_failure("DP2", {
                    "reason": "余圈支撑不是对偶拟阵的圈",
                    "expected": MatroidService.circuit_lists(expected),
                    "found": MatroidService.circuit_lists(dual),
                })
        tag = "DP3" if mode == "strong" else "DP3'"
        tract_id = circuits.tract.tract_id
        for x in circuits.reps:
            for y in cocircuits.reps:
                if mode == "weak" and BitsetUtil.popcount(x.support & y.support) > 3:
                    continue
                report.checked += 1
                s = self.vector_service.inner_product(x, y)
                if not report.accepts(circuits.tract, s, weak=mode == "weak"):
                    report.add_failure(tag, {
                        "circuit": ElementCodec.format_vector(tract_id, x),
                        "cocircuit": ElementCodec.format_vector(tract_id, y),
                    }, ElementCodec.format_sum(tract_id, s))
        logger.info("对偶对校验结束: %s", report.verdict.value)
        return report

    # ---------- 余圈 ----------

    def _cocircuits_dual_gp(self, circuits: CircuitSet) -> CircuitSet:
        gp = self.gp_service
        return gp.circuits_from_gp(gp.dual_gp(gp.gp_from_circuits(circuits)))

    def _cocircuits_signature(self, circuits: CircuitSet) -> CircuitSet:
        # W(e)/W(f) = τ(-X(f)/X(e))，X 是 A ∪ {e, f} 中的圈，A 为 D 补集的极大独立子集
        tract, ground = circuits.tract, circuits.ground
        matroid = self.circuit_axiom_service.underlying_matroid_of(circuits)
        dual = self.matroid_service.dual_matroid(matroid)
        by_support = circuits.support_map()

        def ratio(independent: int, e: int, f: int):
            x = by_support[self.matroid_service.fundamental_circuit(matroid, independent | 1 << e, f)]
            return tract.involution(tract.negate(tract.div(x[f], x[e])))

        reps: List[Vector] = []
        for cocircuit in dual.circuits:
            independent = matroid.max_independent_subset(ground.full & ~cocircuit)
            elements = BitsetUtil.to_indices(cocircuit)
            d0 = elements[0]
            entries = [ZERO] * ground.size
            entries[d0] = tract.one
            for e in elements[1:]:
                entries[e] = ratio(independent, e, d0)
            for e, f in combinations(elements[1:], 2):
                if not tract.is_close(tract.div(entries[e], entries[f]), ratio(independent, e, f)):
                    raise InconsistencyError("余圈签名的比值不一致", {
                        "cocircuit": ground.names(cocircuit), "pair": [ground.labels[e], ground.labels[f]]})
            reps.append(Vector(tract, tuple(entries)))
        return CircuitSet.of(tract, ground, reps)

    def _brute_applicable(self, circuits: CircuitSet) -> bool:
        try:
            self.vector_service.check_brute_force_scale(circuits.tract, circuits.ground.size)
        except UnsupportedScaleError:
            return False
        return self.circuit_axiom_service.check_circuit_axioms(circuits, "strong").passed

    def _cocircuits_brute(self, circuits: CircuitSet) -> CircuitSet:
        self.vector_service.check_brute_force_scale(circuits.tract, circuits.ground.size)
        if not self.circuit_axiom_service.check_circuit_axioms(circuits, "strong").passed:
            raise InvalidInputError("brute 策略要求强 F-拟阵")
        perp = self.vector_service.brute_force_perp_suppmin(
            circuits.tract, circuits.ground.size, circuits.all_vectors())
        return CircuitSet.of(circuits.tract, circuits.ground, perp)

    def cocircuits_of(self, circuits: CircuitSet, strategy: str = "dual_gp",
                      cross_check: bool = True) -> CircuitSet:
        """
        按指定策略计算 F-余圈集；cross_check 时其余可用策略的结果必须射影相等

        Raises:
            InvalidInputError: 未知策略或策略前提不满足
            UnsupportedScaleError: brute 策略超出规模
            InconsistencyError: 策略之间结果不一致
        """
        strategies: Dict[str, Callable[[CircuitSet], CircuitSet]] = {
            "dual_gp": self._cocircuits_dual_gp,
            "signature": self._cocircuits_signature,
            "brute": self._cocircuits_brute,
        }
        if strategy not in strategies:
            raise InvalidInputError(f"未知的余圈策略: {strategy}")
        result = strategies[strategy](circuits)
        if not cross_check:
            return result
        for other in COCIRCUIT_STRATEGIES:
            if other == strategy:
                continue
            if other == "brute" and not self._brute_applicable(circuits):
                continue
            if not strategies[other](circuits).is_projectively_equal(result):
                raise InconsistencyError("余圈策略结果不一致", {"strategies": [strategy, other]})
        logger.debug("余圈策略交叉校验通过: %s", strategy)
        return result
