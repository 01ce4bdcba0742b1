"""
tract 抽象
一个 tract 由阿贝尔群 G 和零和集 N_G ⊆ ℕ[G] 构成，满足 (T0)–(T3)
子类只需实现载荷层的群运算和零和判定，公共层负责校验和包装
"""
from abc import ABC, abstractmethod
from typing import Any, List, Optional, Tuple

import numpy as np

from service.tract.FormalSum import FormalSum
from service.tract.TractElement import TractElement, ZERO
from util.TractException import InvalidElementError


class Tract(ABC):
    # 是否由超域诱导，可逆性 (H2) 只对这类 tract 校验
    hyperfield: bool = False
    # 载荷为浮点数，报告需要记录最大偏差
    numeric: bool = False

    def __init__(self, tract_id: str):
        self.tract_id = tract_id

    # ---------- 载荷层 ----------

    @property
    @abstractmethod
    def one_payload(self) -> Any:
        ...

    @property
    @abstractmethod
    def epsilon_payload(self) -> Any:
        ...

    @abstractmethod
    def _mul_payload(self, a: Any, b: Any) -> Any:
        ...

    @abstractmethod
    def _inverse_payload(self, a: Any) -> Any:
        ...

    @abstractmethod
    def _null(self, s: FormalSum) -> bool:
        ...

    @abstractmethod
    def normalize_payload(self, payload: Any) -> Any:
        """校验并规范化单位载荷，不合法时抛 InvalidElementError"""

    @abstractmethod
    def sample_unit(self, rng: np.random.Generator) -> Any:
        ...

    def _involution_payload(self, a: Any) -> Any:
        return a

    def units(self) -> Optional[Tuple[Any, ...]]:
        """有限 tract 返回全部单位载荷，无限 tract 返回 None"""
        return None

    def payload_close(self, a: Any, b: Any) -> bool:
        return a == b

    # ---------- 公共层 ----------

    @property
    def one(self) -> TractElement:
        return TractElement(self.one_payload)

    @property
    def epsilon(self) -> TractElement:
        return TractElement(self.epsilon_payload)

    @property
    def is_finite(self) -> bool:
        return self.units() is not None

    def elements(self) -> Optional[List[TractElement]]:
        units = self.units()
        if units is None:
            return None
        return [ZERO] + [TractElement(u) for u in units]

    def unit_elements(self) -> Optional[List[TractElement]]:
        units = self.units()
        return None if units is None else [TractElement(u) for u in units]

    def element(self, payload: Any) -> TractElement:
        if payload is None:
            return ZERO
        return TractElement(self.normalize_payload(payload))

    def check(self, x: TractElement) -> TractElement:
        if not isinstance(x, TractElement):
            raise InvalidElementError(f"{self.tract_id}: 不是 tract 元素: {x!r}")
        if x.is_zero:
            return x
        normalized = self.normalize_payload(x.value)
        return x if normalized == x.value else TractElement(normalized)

    def mul(self, a: TractElement, b: TractElement) -> TractElement:
        if a.is_zero or b.is_zero:
            return ZERO
        return TractElement(self._mul_payload(a.value, b.value))

    def inverse(self, a: TractElement) -> TractElement:
        if a.is_zero:
            raise InvalidElementError(f"{self.tract_id}: 零元不可逆")
        return TractElement(self._inverse_payload(a.value))

    def div(self, a: TractElement, b: TractElement) -> TractElement:
        return self.mul(a, self.inverse(b))

    def negate(self, a: TractElement) -> TractElement:
        return self.mul(self.epsilon, a)

    def involution(self, a: TractElement) -> TractElement:
        if a.is_zero:
            return ZERO
        return TractElement(self._involution_payload(a.value))

    def is_close(self, a: TractElement, b: TractElement) -> bool:
        if a.is_zero or b.is_zero:
            return a.is_zero and b.is_zero
        return self.payload_close(a.value, b.value)

    def is_null(self, s: FormalSum) -> bool:
        return self._null(s)

    def is_weakly_null(self, s: FormalSum) -> bool:
        """弱模式校验用的零和判定，精确 tract 与 is_null 相同"""
        return self._null(s)

    def null_deviation(self, s: FormalSum) -> float:
        """s 与严格零和的距离，只对数值 tract 有意义"""
        return 0.0 if self._null(s) else float("inf")

    def contains(self, s: FormalSum, w: TractElement) -> bool:
        """w 是否属于 s 的（迭代）超和；w 非零时归结为 s + ε·w 是否为零和"""
        if w.is_zero:
            return self._null(s)
        return self._null(s + FormalSum.of([self._mul_payload(self.epsilon_payload, w.value)]))

    def scale_sum(self, s: FormalSum, g: TractElement) -> FormalSum:
        if g.is_zero:
            return FormalSum()
        return FormalSum.of(self._mul_payload(g.value, p) for p in s.payloads())

    def finite_hypersum(self, x: TractElement, y: TractElement) -> Optional[List[TractElement]]:
        """
        x ⊞ y 作为集合，能有限列举时返回列表，否则返回 None
        有限 tract 直接逐个元素判定
        """
        elements = self.elements()
        if elements is None:
            return None
        s = FormalSum.of_elements([x, y])
        return [w for w in elements if self.contains(s, w)]

    def sample_null_sum(self, rng: np.random.Generator, max_terms: int) -> FormalSum:
        """抽样一个零和：默认取 g + ε·g"""
        g = self.sample_unit(rng)
        return FormalSum.of([g, self._mul_payload(self.epsilon_payload, g)])

    def __eq__(self, other) -> bool:
        return isinstance(other, Tract) and other.tract_id == self.tract_id

    def __hash__(self) -> int:
        return hash(self.tract_id)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.tract_id})"
