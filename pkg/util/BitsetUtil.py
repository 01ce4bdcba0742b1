from itertools import combinations
from typing import Iterable, Iterator, List, Sequence, Tuple


class BitsetUtil:
    """
    子集的位集表示工具，元素下标从 0 开始
    """

    def __init__(self):
        pass

    @staticmethod
    def from_indices(indices: Iterable[int]) -> int:
        mask = 0
        for i in indices:
            mask |= 1 << i
        return mask

    @staticmethod
    def to_indices(mask: int) -> Tuple[int, ...]:
        result = []
        i = 0
        while mask:
            if mask & 1:
                result.append(i)
            mask >>= 1
            i += 1
        return tuple(result)

    @staticmethod
    def popcount(mask: int) -> int:
        return bin(mask).count("1")

    @staticmethod
    def is_subset(a: int, b: int) -> bool:
        return a & ~b == 0

    @staticmethod
    def full(size: int) -> int:
        return (1 << size) - 1

    @staticmethod
    def k_subsets(size: int, k: int) -> Iterator[Tuple[int, ...]]:
        """按字典序生成 {0..size-1} 的全部 k 元子集"""
        return combinations(range(size), k)

    @staticmethod
    def compress(mask: int, keep: Sequence[int]) -> int:
        """把 mask 重新编号到 keep 列出的元素上"""
        result = 0
        for new_index, old_index in enumerate(keep):
            if mask >> old_index & 1:
                result |= 1 << new_index
        return result

    @staticmethod
    def inversions(sequence: Sequence[int]) -> int:
        """逆序数，用归并计数"""
        values: List[int] = list(sequence)
        if len(values) < 2:
            return 0
        mid = len(values) // 2
        left, right = values[:mid], values[mid:]
        count = BitsetUtil.inversions(left) + BitsetUtil.inversions(right)
        left.sort()
        right.sort()
        j = 0
        for x in left:
            while j < len(right) and right[j] < x:
                j += 1
            count += j
        return count
