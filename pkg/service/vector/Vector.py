from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from service.tract.Tract import Tract
from service.tract.TractElement import TractElement, ZERO
from util.BitsetUtil import BitsetUtil
from util.Constant import Constant
from util.TractException import InvalidInputError, MismatchError


@dataclass(frozen=True)
class GroundSet:
    """
    有序基础集 E，内部元素为下标 0..size-1，labels 用于报告和 JSON
    """
    size: int
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.size < 1 or self.size > Constant.MAX_GROUND_SET:
            raise InvalidInputError(f"基础集大小必须在 1..{Constant.MAX_GROUND_SET} 之间: {self.size}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i + 1) for i in range(self.size)))
        if len(self.labels) != self.size or len(set(self.labels)) != self.size:
            raise InvalidInputError(f"标签个数或唯一性不符: {self.labels}")

    @property
    def full(self) -> int:
        return BitsetUtil.full(self.size)

    def names(self, mask_or_indices) -> List[str]:
        indices = BitsetUtil.to_indices(mask_or_indices) if isinstance(mask_or_indices, int) \
            else mask_or_indices
        return [self.labels[i] for i in indices]

    def remove(self, mask: int) -> Tuple["GroundSet", Tuple[int, ...]]:
        """删去 mask 中的元素，返回新基础集和保留元素的旧下标"""
        keep = tuple(i for i in range(self.size) if not mask >> i & 1)
        return GroundSet(len(keep), tuple(self.labels[i] for i in keep)), keep


@dataclass(frozen=True)
class Vector:
    """F^E 中的向量，support 始终等于非零位置的位集"""
    tract: Tract
    entries: Tuple[TractElement, ...]
    support: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        object.__setattr__(self, "support", BitsetUtil.from_indices(
            i for i, x in enumerate(self.entries) if not x.is_zero))

    @staticmethod
    def of(tract: Tract, entries: Iterable[TractElement]) -> "Vector":
        return Vector(tract, tuple(tract.check(x) for x in entries))

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def is_zero(self) -> bool:
        return self.support == 0

    def __getitem__(self, index: int) -> TractElement:
        return self.entries[index]

    def first_nonzero(self) -> Optional[int]:
        for i, x in enumerate(self.entries):
            if not x.is_zero:
                return i
        return None

    def scale(self, g: TractElement) -> "Vector":
        return Vector(self.tract, tuple(self.tract.mul(g, x) for x in self.entries))

    def normalized(self) -> "Vector":
        """射影代表元：第一个非零坐标缩放为 1"""
        first = self.first_nonzero()
        if first is None:
            return self
        return self.scale(self.tract.inverse(self.entries[first]))

    def restrict(self, keep: Sequence[int]) -> "Vector":
        return Vector(self.tract, tuple(self.entries[i] for i in keep))

    def is_close(self, other: "Vector") -> bool:
        if self.support != other.support or self.size != other.size:
            return False
        return all(self.tract.is_close(a, b) for a, b in zip(self.entries, other.entries))

    def require_compatible(self, other: "Vector") -> None:
        if self.tract.tract_id != other.tract.tract_id:
            raise MismatchError(f"tract 不一致: {self.tract.tract_id} / {other.tract.tract_id}")
        if self.size != other.size:
            raise MismatchError(f"基础集大小不一致: {self.size} / {other.size}")


def zero_vector(tract: Tract, size: int) -> Vector:
    return Vector(tract, (ZERO,) * size)
