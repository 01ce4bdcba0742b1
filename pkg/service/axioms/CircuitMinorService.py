from service.axioms.CircuitSet import CircuitSet
from service.tract.TractHom import TractHom
from service.vector.Vector import Vector
from service.vector.VectorService import VectorService
from util.LogUtil import LogUtil
from util.TractException import InvalidInputError, MismatchError

logger = LogUtil.get_logger(__name__)


class CircuitMinorService:
    """
    圈集上的子式与推出
    删除: C \\ A = {X \\ A | X ∈ C, supp X ∩ A = ∅}
    收缩: C / A = SuppMin({X \\ A | X ∈ C})
    """

    def __init__(self):
        self.vector_service = VectorService()

    def circuit_minor(self, circuits: CircuitSet, mask: int, op: str) -> CircuitSet:
        if mask & ~circuits.ground.full:
            raise InvalidInputError("子集超出基础集")
        if mask == 0:
            return circuits
        if mask == circuits.ground.full:
            raise InvalidInputError("不能删去全部元素")
        ground, keep = circuits.ground.remove(mask)
        if op == "delete":
            restricted = [x.restrict(keep) for x in circuits.reps if x.support & mask == 0]
        elif op == "contract":
            restricted = self.vector_service.supp_min(x.restrict(keep) for x in circuits.reps)
        else:
            raise InvalidInputError(f"未知的子式操作: {op}")
        logger.debug("圈集子式 %s %s: %d -> %d", op, circuits.ground.names(mask), len(circuits), len(restricted))
        return CircuitSet.of(circuits.tract, ground, restricted)

    @staticmethod
    def pushforward_circuits(hom: TractHom, circuits: CircuitSet) -> CircuitSet:
        """逐坐标取像；单位轨道封闭由射影代表元保证"""
        if circuits.tract.tract_id != hom.source.tract_id:
            raise MismatchError(f"同态源 {hom.source.tract_id} 与圈集的 tract {circuits.tract.tract_id} 不符")
        images = [Vector(hom.target, tuple(hom(x) for x in rep.entries)) for rep in circuits.reps]
        return CircuitSet.of(hom.target, circuits.ground, images)
