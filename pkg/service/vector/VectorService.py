from itertools import product
from typing import Dict, Iterable, Iterator, List, Mapping, Optional

from service.tract.FormalSum import FormalSum
from service.tract.Tract import Tract
from service.tract.TractElement import TractElement
from service.vector.Vector import Vector
from util.BitsetUtil import BitsetUtil
from util.ConfigUtil import ConfigUtil
from util.LogUtil import LogUtil
from util.TractException import InvalidInputError, MismatchError, UnsupportedScaleError

logger = LogUtil.get_logger(__name__)


class VectorService:
    """
    F^E 上的向量运算：内积与正交、射影等价、支撑极小、线性组合残差
    """

    def __init__(self, brute_force_caps: Optional[Dict[str, int]] = None):
        self.brute_force_caps = brute_force_caps or ConfigUtil.load_brute_force_caps_from_config()

    @staticmethod
    def inner_product(x: Vector, y: Vector) -> FormalSum:
        """
        Σ X(e)·τ(Y(e))，只取公共支撑上的项

        Raises:
            MismatchError: tract 或基础集不一致
        """
        x.require_compatible(y)
        tract = x.tract
        common = x.support & y.support
        return FormalSum.of_elements(
            tract.mul(x[i], tract.involution(y[i])) for i in BitsetUtil.to_indices(common))

    @staticmethod
    def is_orthogonal(x: Vector, y: Vector) -> bool:
        return x.tract.is_null(VectorService.inner_product(x, y))

    @staticmethod
    def projective_scalar(x: Vector, y: Vector) -> Optional[TractElement]:
        """
        返回满足 X = g·Y 的单位 g，不存在时返回 None

        Raises:
            InvalidInputError: 零向量
        """
        x.require_compatible(y)
        if x.is_zero or y.is_zero:
            raise InvalidInputError("射影比较不接受零向量")
        if x.support != y.support:
            return None
        first = x.first_nonzero()
        g = x.tract.div(x[first], y[first])
        return g if x.is_close(y.scale(g)) else None

    @staticmethod
    def is_projectively_equal(x: Vector, y: Vector) -> bool:
        return VectorService.projective_scalar(x, y) is not None

    @staticmethod
    def supp_min(vectors: Iterable[Vector]) -> List[Vector]:
        """支撑在非空支撑中按包含关系极小的向量，零向量去掉"""
        candidates = [v for v in vectors if not v.is_zero]
        supports = {v.support for v in candidates}
        minimal = {s for s in supports
                    if not any(t != s and BitsetUtil.is_subset(t, s) for t in supports)}
        result: List[Vector] = []
        seen = set()
        for v in candidates:
            if v.support in minimal and v not in seen:
                seen.add(v)
                result.append(v)
        return result

    @staticmethod
    def combination_residual(x: Vector, coeffs: Mapping[int, TractElement],
                             gens: Mapping[int, Vector]) -> List[FormalSum]:
        """
        对每个 f 给出形式和 ε·X(f) + Σ_e coeffs(e)·gens(e)(f)
        调用方逐个位置判定是否为零和
        """
        if set(coeffs) != set(gens):
            raise MismatchError("系数与生成元的下标集不一致")
        for g in gens.values():
            x.require_compatible(g)
        tract = x.tract
        residuals = []
        for f in range(x.size):
            terms = [tract.negate(x[f])]
            terms += [tract.mul(coeffs[e], gens[e][f]) for e in sorted(gens)]
            residuals.append(FormalSum.of_elements(terms))
        return residuals

    @staticmethod
    def all_vectors(tract: Tract, size: int) -> Iterator[Vector]:
        elements = tract.elements()
        if elements is None:
            raise UnsupportedScaleError(f"{tract.tract_id} 不是有限 tract，无法枚举 F^E")
        for entries in product(elements, repeat=size):
            yield Vector(tract, entries)

    def check_brute_force_scale(self, tract: Tract, size: int) -> None:
        elements = tract.elements()
        if elements is None:
            raise UnsupportedScaleError(f"{tract.tract_id} 不是有限 tract")
        if len(elements) > self.brute_force_caps["max_tract_size"]:
            raise UnsupportedScaleError(f"|F| = {len(elements)} 超出上限 {self.brute_force_caps['max_tract_size']}")
        if size > self.brute_force_caps["max_elements"]:
            raise UnsupportedScaleError(f"m = {size} 超出上限 {self.brute_force_caps['max_elements']}")

    def brute_force_perp_suppmin(self, tract: Tract, size: int, vectors: Iterable[Vector]) -> List[Vector]:
        """
        枚举 F^E，返回与 vectors 全部正交的非零向量中支撑极小者

        Raises:
            UnsupportedScaleError: tract 无限或超出规模上限
        """
        self.check_brute_force_scale(tract, size)
        constraints = list(vectors)
        for v in constraints:
            if v.size != size or v.tract.tract_id != tract.tract_id:
                raise MismatchError("约束向量与枚举空间不一致")
        perp = [z for z in self.all_vectors(tract, size)
                if not z.is_zero and all(self.is_orthogonal(z, x) for x in constraints)]
        logger.debug("暴力枚举 %s^%d，正交向量 %d 个", tract.tract_id, size, len(perp))
        return self.supp_min(perp)
