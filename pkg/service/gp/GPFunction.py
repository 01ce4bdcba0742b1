from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Tuple

from service.tract.Tract import Tract
from service.tract.TractElement import TractElement, ZERO
from service.vector.Vector import GroundSet
from util.BitsetUtil import BitsetUtil
from util.TractException import InvalidInputError


@dataclass(frozen=True)
class GPFunction:
    """
    秩 r 的交错函数 φ: E^r -> F，只在升序 r 元子集上存值，零值不存
    任意元组的取值经交错延拓得到，见 GPService.gp_eval
    秩 0 时唯一的值存在空元组上
    """
    tract: Tract
    ground: GroundSet
    rank: int
    values: Tuple[Tuple[Tuple[int, ...], TractElement], ...]
    _lookup: Dict[Tuple[int, ...], TractElement] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.rank <= self.ground.size:
            raise InvalidInputError(f"秩 {self.rank} 超出基础集大小 {self.ground.size}")
        lookup: Dict[Tuple[int, ...], TractElement] = {}
        for subset, value in self.values:
            subset = tuple(subset)
            if len(subset) != self.rank or len(set(subset)) != self.rank:
                raise InvalidInputError(f"子集 {subset} 与秩 {self.rank} 不符")
            if any(i < 0 or i >= self.ground.size for i in subset):
                raise InvalidInputError(f"子集 {subset} 超出基础集")
            value = self.tract.check(value)
            if not value.is_zero:
                lookup[tuple(sorted(subset))] = value
        object.__setattr__(self, "values", tuple(sorted(lookup.items())))
        object.__setattr__(self, "_lookup", lookup)

    @staticmethod
    def of(tract: Tract, ground: GroundSet, rank: int,
           mapping: Mapping[Tuple[int, ...], TractElement]) -> "GPFunction":
        return GPFunction(tract, ground, rank, tuple(mapping.items()))

    def value(self, sorted_subset: Iterable[int]) -> TractElement:
        return self._lookup.get(tuple(sorted_subset), ZERO)

    def items(self) -> List[Tuple[Tuple[int, ...], TractElement]]:
        return list(self.values)

    @property
    def is_zero(self) -> bool:
        return not self.values

    def support_bases(self) -> List[int]:
        return [BitsetUtil.from_indices(subset) for subset, _ in self.values]
