from collections import Counter
from dataclasses import dataclass
from typing import Any, Iterable, List, Tuple

from service.tract.TractElement import TractElement
from util.TractException import InvalidElementError


@dataclass(frozen=True)
class FormalSum:
    """
    ℕ[G] 中的元素：群元素的有限多重集
    terms 按载荷排序，相同载荷合并，重数严格为正；空多重集即 ℕ[G] 的零
    """
    terms: Tuple[Tuple[Any, int], ...] = ()

    def __post_init__(self):
        for payload, multiplicity in self.terms:
            if payload is None:
                raise InvalidElementError("形式和中不能出现零元")
            if multiplicity <= 0:
                raise InvalidElementError(f"重数必须为正: {multiplicity}")

    @staticmethod
    def of(payloads: Iterable[Any]) -> "FormalSum":
        counter = Counter(payloads)
        return FormalSum(tuple(sorted(counter.items(), key=lambda item: item[0])))

    @staticmethod
    def of_elements(elements: Iterable[TractElement]) -> "FormalSum":
        """零元不计入"""
        return FormalSum.of(x.value for x in elements if not x.is_zero)

    @staticmethod
    def from_counts(counts: dict) -> "FormalSum":
        merged: Counter = Counter()
        for payload, multiplicity in counts.items():
            merged[payload] += multiplicity
        return FormalSum(tuple(sorted(merged.items(), key=lambda item: item[0])))

    def payloads(self) -> List[Any]:
        result = []
        for payload, multiplicity in self.terms:
            result.extend([payload] * multiplicity)
        return result

    def count(self) -> int:
        return sum(multiplicity for _, multiplicity in self.terms)

    def is_empty(self) -> bool:
        return not self.terms

    def __add__(self, other: "FormalSum") -> "FormalSum":
        merged: Counter = Counter(dict(self.terms))
        for payload, multiplicity in other.terms:
            merged[payload] += multiplicity
        return FormalSum(tuple(sorted(merged.items(), key=lambda item: item[0])))

    def __len__(self) -> int:
        return self.count()
