"""
经典拟阵运算：按圈族或基族构造并校验、秩、对偶、基本圈、模族判定、子式
"""
import re
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Set

from service.matroid.ClassicalMatroid import ClassicalMatroid
from service.vector.Vector import GroundSet
from util.BitsetUtil import BitsetUtil
from util.LogUtil import LogUtil
from util.TractException import InvalidInputError, MatroidAxiomError, UnknownNameError

logger = LogUtil.get_logger(__name__)

_UNIFORM_PATTERN = re.compile(r"^U(\d+),(\d+)$")

# K4 的边 1=ab 2=ac 3=ad 4=bc 5=bd 6=cd
_MK4_CIRCUITS = [(1, 2, 4), (1, 3, 5), (2, 3, 6), (4, 5, 6), (1, 3, 4, 6), (1, 2, 5, 6), (2, 3, 4, 5)]


class MatroidService:

    def __init__(self):
        pass

    @staticmethod
    def matroid_from_circuits(ground: GroundSet, supports: Iterable[int]) -> ClassicalMatroid:
        """
        校验圈族并构造拟阵

        Raises:
            MatroidAxiomError: 含空圈、存在包含关系，或不满足圈消去，witness 给出违反的圈对
        """
        circuits = sorted(set(supports))
        for c in circuits:
            if c == 0:
                raise MatroidAxiomError("圈不能为空集", {"circuit": []})
            if c >> ground.size:
                raise MatroidAxiomError("圈超出基础集", {"circuit": BitsetUtil.to_indices(c)})
        for a, b in combinations(circuits, 2):
            if BitsetUtil.is_subset(a, b) or BitsetUtil.is_subset(b, a):
                raise MatroidAxiomError("圈之间存在包含关系", {"pair": [ground.names(a), ground.names(b)]})
        for a, b in combinations(circuits, 2):
            union = a | b
            for e in BitsetUtil.to_indices(a & b):
                target = union & ~(1 << e)
                if not any(BitsetUtil.is_subset(c, target) for c in circuits):
                    raise MatroidAxiomError("不满足圈消去公理", {
                        "pair": [ground.names(a), ground.names(b)],
                        "eliminated": ground.labels[e],
                    })
        return ClassicalMatroid(ground, tuple(circuits))

    @staticmethod
    def is_basis_family(size: int, bases: Sequence[int]) -> bool:
        """基交换公理：对 B1 中的 x ∉ B2，存在 y ∈ B2 \\ B1 使 B1 - x + y 仍是基"""
        if not bases:
            return False
        basis_set = set(bases)
        ranks = {BitsetUtil.popcount(b) for b in bases}
        if len(ranks) != 1:
            return False
        for b1 in bases:
            for b2 in bases:
                for x in BitsetUtil.to_indices(b1 & ~b2):
                    if not any((b1 & ~(1 << x)) | 1 << y in basis_set
                               for y in BitsetUtil.to_indices(b2 & ~b1)):
                        return False
        return True

    @staticmethod
    def matroid_from_bases(ground: GroundSet, bases: Iterable[int]) -> ClassicalMatroid:
        """由基族得到圈族：所有基的所有基本圈"""
        bases = sorted(set(bases))
        if not MatroidService.is_basis_family(ground.size, bases):
            raise MatroidAxiomError("基族不满足基交换公理", {"bases": [ground.names(b) for b in bases]})
        basis_set = set(bases)
        circuits: Set[int] = set()
        for b in bases:
            for e in BitsetUtil.to_indices(ground.full & ~b):
                circuit = 1 << e
                for x in BitsetUtil.to_indices(b):
                    if (b & ~(1 << x)) | 1 << e in basis_set:
                        circuit |= 1 << x
                circuits.add(circuit)
        return ClassicalMatroid(ground, tuple(circuits))

    @staticmethod
    def rank(matroid: ClassicalMatroid, mask: int) -> int:
        return matroid.rank(mask)

    @staticmethod
    def nullity(matroid: ClassicalMatroid, mask: int) -> int:
        return matroid.nullity(mask)

    @staticmethod
    def dual_matroid(matroid: ClassicalMatroid) -> ClassicalMatroid:
        full = matroid.ground.full
        return MatroidService.matroid_from_bases(matroid.ground, [full & ~b for b in matroid.bases])

    @staticmethod
    def fundamental_circuit(matroid: ClassicalMatroid, basis: int, e: int) -> int:
        """
        B ∪ {e} 中唯一的圈

        Raises:
            InvalidInputError: B 不是基或 e ∈ B
        """
        if not matroid.is_basis(basis):
            raise InvalidInputError("不是基", {"basis": matroid.ground.names(basis)})
        if basis >> e & 1:
            raise InvalidInputError("元素已在基中", {"element": matroid.ground.labels[e]})
        span = basis | 1 << e
        for c in matroid.circuits:
            if BitsetUtil.is_subset(c, span):
                return c
        raise MatroidAxiomError("基本圈不存在", {"basis": matroid.ground.names(basis)})

    @staticmethod
    def is_modular_family(matroid: ClassicalMatroid, circuits: Sequence[int]) -> bool:
        """
        k 个不同的圈构成模族当且仅当它们的并的零化度为 k

        Raises:
            InvalidInputError: 输入不是该拟阵的圈或有重复
        """
        if len(set(circuits)) != len(circuits):
            raise InvalidInputError("模族中的圈必须互不相同")
        for c in circuits:
            if not matroid.is_circuit(c):
                raise InvalidInputError("不是圈", {"circuit": matroid.ground.names(c)})
        union = 0
        for c in circuits:
            union |= c
        return matroid.nullity(union) == len(circuits)

    @staticmethod
    def union_lattice_height(matroid: ClassicalMatroid, mask: int) -> int:
        """在圈的并构成的格中直接计算 mask 的高度，用于和零化度交叉验证"""
        inside = [c for c in matroid.circuits if BitsetUtil.is_subset(c, mask)]
        lattice = {0}
        frontier = [0]
        while frontier:
            new = []
            for s in frontier:
                for c in inside:
                    t = s | c
                    if t not in lattice:
                        lattice.add(t)
                        new.append(t)
            frontier = new
        if mask not in lattice:
            raise InvalidInputError("不是圈的并", {"set": matroid.ground.names(mask)})
        height: Dict[int, int] = {}
        for s in sorted(lattice, key=BitsetUtil.popcount):
            below = [height[t] for t in height if t != s and BitsetUtil.is_subset(t, s)]
            height[s] = 1 + max(below) if below else 0
        return height[mask]

    @staticmethod
    def matroid_minor(matroid: ClassicalMatroid, mask: int, op: str) -> ClassicalMatroid:
        """
        删除或收缩 mask，结果的基础集为 E \\ A，保留原标签

        Args:
            op: "delete" 或 "contract"
        """
        if mask & ~matroid.ground.full:
            raise InvalidInputError("子集超出基础集")
        if mask == matroid.ground.full:
            raise InvalidInputError("不能删去全部元素")
        ground, keep = matroid.ground.remove(mask)
        if op == "delete":
            supports = [c for c in matroid.circuits if c & mask == 0]
        elif op == "contract":
            candidates = {c & ~mask for c in matroid.circuits if c & ~mask}
            supports = [c for c in candidates
                        if not any(d != c and BitsetUtil.is_subset(d, c) for d in candidates)]
        else:
            raise InvalidInputError(f"未知的子式操作: {op}")
        return ClassicalMatroid(ground, tuple(BitsetUtil.compress(c, keep) for c in supports))

    @staticmethod
    def uniform(rank: int, size: int) -> ClassicalMatroid:
        if not 0 <= rank <= size:
            raise InvalidInputError(f"U{rank},{size} 参数不合法")
        ground = GroundSet(size)
        circuits = [BitsetUtil.from_indices(s) for s in combinations(range(size), rank + 1)]
        return ClassicalMatroid(ground, tuple(circuits))

    @staticmethod
    def mk4() -> ClassicalMatroid:
        circuits = [BitsetUtil.from_indices(i - 1 for i in c) for c in _MK4_CIRCUITS]
        return ClassicalMatroid(GroundSet(6), tuple(circuits))

    @staticmethod
    def builtin(name: str) -> ClassicalMatroid:
        """内置拟阵："U{r},{m}" 或 "MK4" """
        if name == "MK4":
            return MatroidService.mk4()
        match = _UNIFORM_PATTERN.match(name)
        if match:
            return MatroidService.uniform(int(match.group(1)), int(match.group(2)))
        raise UnknownNameError(f"未知的内置拟阵: {name}")

    @staticmethod
    def circuit_lists(matroid: ClassicalMatroid) -> List[List[str]]:
        return [matroid.ground.names(c) for c in matroid.circuits]
