from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from service.tract.Tract import Tract
from service.vector.Vector import GroundSet, Vector
from util.TractException import MismatchError, UnsupportedScaleError


@dataclass(frozen=True)
class CircuitSet:
    """
    F-圈集，按单位缩放封闭
    只存射影代表元（第一个非零坐标为 1），需要全部向量时再按单位群展开
    """
    tract: Tract
    ground: GroundSet
    reps: Tuple[Vector, ...]

    @staticmethod
    def of(tract: Tract, ground: GroundSet, vectors: Iterable[Vector]) -> "CircuitSet":
        reps: List[Vector] = []
        for v in vectors:
            if v.size != ground.size:
                raise MismatchError(f"向量长度 {v.size} 与基础集大小 {ground.size} 不符")
            if v.tract.tract_id != tract.tract_id:
                raise MismatchError(f"向量 tract {v.tract.tract_id} 与圈集 tract {tract.tract_id} 不符")
            rep = v.normalized()
            if not any(rep.is_close(r) for r in reps):
                reps.append(rep)
        reps.sort(key=lambda r: (bin(r.support).count("1"), r.support))
        return CircuitSet(tract, ground, tuple(reps))

    def __len__(self) -> int:
        return len(self.reps)

    def supports(self) -> List[int]:
        return [r.support for r in self.reps]

    def support_map(self) -> Dict[int, Vector]:
        """支撑到代表元；同一支撑有多个代表元时只取第一个，(C2) 校验会报告这种情况"""
        result: Dict[int, Vector] = {}
        for r in self.reps:
            result.setdefault(r.support, r)
        return result

    def rep_for_support(self, support: int) -> Optional[Vector]:
        return self.support_map().get(support)

    def all_vectors(self) -> List[Vector]:
        units = self.tract.unit_elements()
        if units is None:
            raise UnsupportedScaleError(f"{self.tract.tract_id} 不是有限 tract，无法展开单位轨道")
        result: List[Vector] = []
        for r in self.reps:
            orbit = {r.scale(g) for g in units}
            result.extend(sorted(orbit, key=lambda v: [str(x.value) for x in v.entries]))
        return result

    def is_projectively_equal(self, other: "CircuitSet") -> bool:
        if self.tract.tract_id != other.tract.tract_id or self.ground.size != other.ground.size:
            return False
        if len(self.reps) != len(other.reps):
            return False
        return all(any(a.is_close(b) for b in other.reps) for a in self.reps)
