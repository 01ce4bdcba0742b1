from dataclasses import dataclass, field
from itertools import combinations
from typing import Tuple

from service.vector.Vector import GroundSet
from util.BitsetUtil import BitsetUtil


@dataclass(frozen=True)
class ClassicalMatroid:
    """
    以圈族表示的经典拟阵，圈为位集
    秩与基在构造时一次算好，之后只读
    """
    ground: GroundSet
    circuits: Tuple[int, ...]
    rank_value: int = field(init=False, compare=False)
    bases: Tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        ordered = tuple(sorted(set(self.circuits),
                               key=lambda c: (BitsetUtil.popcount(c), BitsetUtil.to_indices(c))))
        object.__setattr__(self, "circuits", ordered)
        rank_value = self.rank(self.ground.full)
        object.__setattr__(self, "rank_value", rank_value)
        bases = tuple(BitsetUtil.from_indices(subset)
                      for subset in combinations(range(self.ground.size), rank_value)
                      if self.is_independent(BitsetUtil.from_indices(subset)))
        object.__setattr__(self, "bases", bases)

    @property
    def size(self) -> int:
        return self.ground.size

    def is_independent(self, mask: int) -> bool:
        return not any(BitsetUtil.is_subset(c, mask) for c in self.circuits)

    def rank(self, mask: int) -> int:
        """贪心取极大独立子集"""
        independent = 0
        for i in BitsetUtil.to_indices(mask):
            candidate = independent | 1 << i
            if self.is_independent(candidate):
                independent = candidate
        return BitsetUtil.popcount(independent)

    def nullity(self, mask: int) -> int:
        return BitsetUtil.popcount(mask) - self.rank(mask)

    def max_independent_subset(self, mask: int) -> int:
        independent = 0
        for i in BitsetUtil.to_indices(mask):
            if self.is_independent(independent | 1 << i):
                independent |= 1 << i
        return independent

    def is_basis(self, mask: int) -> bool:
        return mask in self.bases

    def is_circuit(self, mask: int) -> bool:
        return mask in self.circuits
