"""
有限 tract 上的穷举探针
perfectness_probe 检查向量与余向量是否两两正交
enumerate_gp 枚举小规模 GP 函数，用于弱/强拟阵的普查
"""
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Tuple

from dao.jsonfile.ElementCodec import ElementCodec
from service.axioms.CircuitSet import CircuitSet
from service.axioms.DualPairService import DualPairService
from service.common.AxiomReport import AxiomReport
from service.gp.GPFunction import GPFunction
from service.gp.GPService import GPService
from service.matroid.ClassicalMatroid import ClassicalMatroid
from service.matroid.MatroidService import MatroidService
from service.tract.Tract import Tract
from service.vector.Vector import GroundSet, Vector
from service.vector.VectorService import VectorService
from util.BitsetUtil import BitsetUtil
from util.ConfigUtil import ConfigUtil
from util.LogUtil import LogUtil
from util.TractException import InvalidInputError, UnsupportedScaleError

logger = LogUtil.get_logger(__name__)


@dataclass(frozen=True)
class EnumerationRecord:
    phi: GPFunction
    strong: bool
    bases: Tuple[int, ...]


class PerfectnessService:

    def __init__(self, enumerate_caps: Optional[Dict[str, int]] = None):
        self.enumerate_caps = enumerate_caps or ConfigUtil.load_enumerate_caps_from_config()
        self.vector_service = VectorService()
        self.dual_pair_service = DualPairService()
        self.gp_service = GPService()
        self.matroid_service = MatroidService()

    def _orthogonal_to_all(self, tract: Tract, size: int, constraints: List[Vector]) -> List[Vector]:
        return [z for z in self.vector_service.all_vectors(tract, size)
                if all(self.vector_service.is_orthogonal(z, x) for x in constraints)]

    def perfectness_probe(self, circuits: CircuitSet) -> AxiomReport:
        """
        向量：与所有余圈正交的 F^E 元素；余向量：与所有圈正交的元素
        任意一对不正交的向量与余向量都记为失败

        Raises:
            UnsupportedScaleError: tract 无限或超出暴力枚举上限
        """
        tract, size = circuits.tract, circuits.ground.size
        self.vector_service.check_brute_force_scale(tract, size)
        logger.info("完美性探针: tract=%s m=%d", tract.tract_id, size)
        cocircuits = self.dual_pair_service.cocircuits_of(circuits, "dual_gp", cross_check=False)
        vectors = self._orthogonal_to_all(tract, size, list(cocircuits.reps))
        covectors = self._orthogonal_to_all(tract, size, list(circuits.reps))
        report = AxiomReport(mode="perfectness")
        report.notes["vectors"] = len(vectors)
        report.notes["covectors"] = len(covectors)
        for v, w in product(vectors, covectors):
            report.checked += 1
            s = self.vector_service.inner_product(v, w)
            if not tract.is_null(s):
                report.add_failure("perfectness", {
                    "vector": ElementCodec.format_vector(tract.tract_id, v),
                    "covector": ElementCodec.format_vector(tract.tract_id, w),
                }, ElementCodec.format_sum(tract.tract_id, s))
        logger.info("完美性探针结束: 向量 %d 个, 余向量 %d 个, 违反 %d 对",
                    len(vectors), len(covectors), len(report.failures))
        return report

    def check_enumerate_scale(self, tract: Tract, rank: int, size: int) -> None:
        elements = tract.elements()
        if elements is None:
            raise UnsupportedScaleError(f"{tract.tract_id} 不是有限 tract")
        caps = self.enumerate_caps
        if len(elements) > caps["max_tract_size"]:
            raise UnsupportedScaleError(f"|F| = {len(elements)} 超出上限 {caps['max_tract_size']}")
        if size > caps["max_elements"]:
            raise UnsupportedScaleError(f"m = {size} 超出上限 {caps['max_elements']}")
        if rank > caps["max_rank"]:
            raise UnsupportedScaleError(f"r = {rank} 超出上限 {caps['max_rank']}")
        if not 0 <= rank <= size:
            raise InvalidInputError(f"秩 {rank} 与基础集大小 {size} 不符")

    def enumerate_gp(self, tract: Tract, rank: int, size: int) -> Iterator[EnumerationRecord]:
        """
        按基族分组，逐个给出满足 (GP3)' 的 GP 函数的射影类
        字典序第一个基取值 1，strong 标记是否同时满足 (GP3)
        """
        self.check_enumerate_scale(tract, rank, size)
        ground = GroundSet(size)
        masks = [BitsetUtil.from_indices(s) for s in combinations(range(size), rank)]
        for choice in product((False, True), repeat=len(masks)):
            bases = tuple(mask for mask, flag in zip(masks, choice) if flag)
            if not bases or not self.matroid_service.is_basis_family(size, list(bases)):
                continue
            yield from self._enumerate_on_bases(tract, ground, rank, bases)

    def enumerate_on_matroid(self, tract: Tract, matroid: ClassicalMatroid) -> Iterator[EnumerationRecord]:
        """
        固定支撑拟阵，枚举其上满足 (GP3)' 的 GP 函数射影类
        只检查 tract 大小，不受 max_elements 与 max_rank 限制
        """
        self.check_enumerate_scale(tract, 0, 0)
        bases = tuple(sorted(matroid.bases, key=BitsetUtil.to_indices))
        yield from self._enumerate_on_bases(tract, matroid.ground, matroid.rank_value, bases)

    def _enumerate_on_bases(self, tract: Tract, ground: GroundSet, rank: int,
                            bases: Tuple[int, ...]) -> Iterator[EnumerationRecord]:
        # 字典序第一个基取值 1
        subsets = [BitsetUtil.to_indices(b) for b in bases]
        for rest in product(tract.unit_elements(), repeat=len(subsets) - 1):
            values = {subsets[0]: tract.one}
            values.update(zip(subsets[1:], rest))
            phi = GPFunction.of(tract, ground, rank, values)
            if not self.gp_service.check_gp(phi, "weak").passed:
                continue
            yield EnumerationRecord(phi, self.gp_service.check_gp(phi, "strong").passed, bases)

    def census(self, tract: Tract, rank: int, size: int) -> Dict[str, int]:
        matroids, weak, strong = set(), 0, 0
        for record in self.enumerate_gp(tract, rank, size):
            matroids.add(record.bases)
            weak += 1
            strong += int(record.strong)
        return {"matroids": len(matroids), "weak": weak, "strong": strong}
