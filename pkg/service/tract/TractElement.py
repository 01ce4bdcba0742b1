from dataclasses import dataclass
from typing import Any, Optional


@dataclass(frozen=True)
class TractElement:
    """
    F = G ∪ {0} 中的一个元素
    value 为 None 表示零元，否则是群元素的载荷（int、Fraction 或相位角 float）
    """
    value: Optional[Any] = None

    @property
    def is_zero(self) -> bool:
        return self.value is None

    @staticmethod
    def unit(payload: Any) -> "TractElement":
        return TractElement(payload)

    def __repr__(self) -> str:
        return "0" if self.value is None else f"<{self.value}>"


ZERO = TractElement()
