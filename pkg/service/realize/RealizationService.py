"""
由矩阵实现 GP 函数：φ(x_1..x_r) = det(A[:, x_1..x_r])
行列式用 sympy 在有理数上精确计算，再映到目标 tract
"""
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Union

import numpy as np
from sympy import Matrix, Rational

from dao.TractType import TractType
from service.gp.GPFunction import GPFunction
from service.tract.PartialFieldTracts import PrimeFieldTract
from service.tract.Tract import Tract
from service.tract.TractElement import TractElement, ZERO
from service.vector.Vector import GroundSet
from util.LogUtil import LogUtil
from util.TractException import InvalidInputError

logger = LogUtil.get_logger(__name__)

Entry = Union[int, Fraction]

_EXACT_TRACTS = (TractType.RATIONAL.value, TractType.REGULAR.value, TractType.DYADIC.value,
                 TractType.INITIAL.value)


class RealizationService:

    def __init__(self):
        pass

    @staticmethod
    def _to_sympy(matrix: Sequence[Sequence[Entry]]) -> Matrix:
        rows = [list(row) for row in matrix]
        if not rows or not rows[0] or any(len(row) != len(rows[0]) for row in rows):
            raise InvalidInputError("矩阵必须是非空的矩形")
        return Matrix([[Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row]
                       for row in rows])

    @staticmethod
    def det_to_element(tract: Tract, det: Fraction) -> TractElement:
        """
        有理行列式映到 tract：GF(p) 取模，𝕊 取符号，𝕂 取支撑，ℚ/𝕌₀/𝔻/𝕀 直接取值

        Raises:
            InvalidElementError: 行列式不是目标部分域的单位，例如 𝕌₀ 上出现 ±2
        """
        if det == 0:
            return ZERO
        if isinstance(tract, PrimeFieldTract):
            residue = det.numerator * pow(det.denominator, -1, tract.p) % tract.p
            return ZERO if residue == 0 else tract.element(residue)
        if tract.tract_id == TractType.SIGN.value:
            return tract.element(1 if det > 0 else -1)
        if tract.tract_id == TractType.KRASNER.value:
            return tract.one
        if tract.tract_id in _EXACT_TRACTS:
            return tract.element(det)
        raise InvalidInputError(f"{tract.tract_id} 不支持由矩阵实现")

    def gp_from_matrix(self, tract: Tract, matrix: Sequence[Sequence[Entry]],
                       labels: Sequence[str] = ()) -> GPFunction:
        """
        r×m 矩阵的全部 r 阶子式

        Raises:
            InvalidInputError: 矩阵在目标 tract 上不满秩
        """
        a = self._to_sympy(matrix)
        r, m = a.shape
        ground = GroundSet(m, tuple(labels))
        values = {}
        for cols in combinations(range(m), r):
            det = a.extract(list(range(r)), list(cols)).det()
            value = self.det_to_element(tract, Fraction(int(det.p), int(det.q)))
            if not value.is_zero:
                values[cols] = value
        if not values:
            raise InvalidInputError(f"矩阵在 {tract.tract_id} 上不满秩")
        logger.debug("矩阵实现: tract=%s r=%d m=%d 非零子式 %d 个", tract.tract_id, r, m, len(values))
        return GPFunction.of(tract, ground, r, values)

    @staticmethod
    def random_matrix(rng: np.random.Generator, rank: int, size: int, p: Optional[int] = None,
                      bound: int = 3, max_tries: int = 100) -> List[List[int]]:
        """
        抽取满秩的整数矩阵；给出 p 时元素取 0..p-1，满秩按模 p 判定

        Raises:
            InvalidInputError: 多次抽取仍不满秩
        """
        if not 1 <= rank <= size:
            raise InvalidInputError(f"秩 {rank} 与列数 {size} 不符")
        low, high = (0, p) if p is not None else (-bound, bound + 1)
        for _ in range(max_tries):
            matrix = rng.integers(low, high, size=(rank, size)).tolist()
            a = Matrix(matrix)
            if p is None and a.rank() == rank:
                return matrix
            if p is not None and any(a.extract(list(range(rank)), list(cols)).det() % p != 0
                                     for cols in combinations(range(size), rank)):
                return matrix
        raise InvalidInputError(f"{max_tries} 次抽取都不满秩")
