"""
Grassmann–Plücker 函数服务
取值、强/弱公理校验、圈的提取与重构、对偶、子式和推出
"""
from collections import deque
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from dao.jsonfile.ElementCodec import ElementCodec
from service.axioms.CircuitSet import CircuitSet
from service.common.AxiomReport import AxiomReport
from service.gp.GPFunction import GPFunction
from service.matroid.ClassicalMatroid import ClassicalMatroid
from service.matroid.MatroidService import MatroidService
from service.tract.FormalSum import FormalSum
from service.tract.TractElement import TractElement, ZERO
from service.tract.TractHom import TractHom
from service.vector.Vector import Vector
from util.BitsetUtil import BitsetUtil
from util.LogUtil import LogUtil
from util.TractException import (InconsistencyError, InvalidInputError, MismatchError,
                                 NotRepresentableError)

logger = LogUtil.get_logger(__name__)

GP_MODES = ("weak", "strong")
MINOR_OPS = ("delete", "contract")


class GPService:

    def __init__(self):
        self.matroid_service = MatroidService()

    # ---------- 取值 ----------

    @staticmethod
    def gp_eval(phi: GPFunction, elements: Tuple[int, ...]) -> TractElement:
        """
        交错延拓：有重复元素时为 0，否则为排序置换的符号乘以存储值，符号用 1 或 ε 实现

        Raises:
            InvalidInputError: 元组长度不等于秩

        Example:
            # >>> GPService.gp_eval(phi, (1, 0))   # = ε·φ(0, 1)
        """
        elements = tuple(elements)
        if len(elements) != phi.rank:
            raise InvalidInputError(f"元组长度 {len(elements)} 与秩 {phi.rank} 不符")
        if len(set(elements)) != len(elements):
            return ZERO
        value = phi.value(sorted(elements))
        if BitsetUtil.inversions(elements) % 2 == 1:
            return phi.tract.negate(value)
        return value

    # ---------- 公理 ----------

    def support_matroid(self, phi: GPFunction) -> ClassicalMatroid:
        if phi.is_zero:
            raise InvalidInputError("GP 函数恒为零")
        return self.matroid_service.matroid_from_bases(phi.ground, phi.support_bases())

    def relation_sum(self, phi: GPFunction, big: Tuple[int, ...], small: Tuple[int, ...]) -> FormalSum:
        """Σ_k (-1)^k φ(I \\ x_k)·φ(x_k, J)"""
        tract = phi.tract
        terms = []
        for k, x in enumerate(big):
            left = phi.value(big[:k] + big[k + 1:])
            if left.is_zero:
                continue
            right = self.gp_eval(phi, (x,) + small)
            if right.is_zero:
                continue
            term = tract.mul(left, right)
            terms.append(tract.negate(term) if k % 2 == 1 else term)
        return FormalSum.of_elements(terms)

    def check_gp(self, phi: GPFunction, mode: str) -> AxiomReport:
        """
        校验 (GP1)、支撑的基交换以及 Grassmann–Plücker 关系
        strong 检查全部 (r+1) 元子集 I 与 (r-1) 元子集 J，weak 只检查 |I \\ J| = 3 的三项关系

        Returns:
            AxiomReport，每个失败的 (I, J) 连同其形式和都列出
        """
        if mode not in GP_MODES:
            raise InvalidInputError(f"未知的模式: {mode}")
        logger.debug("校验 GP 函数: tract=%s rank=%d m=%d mode=%s",
                     phi.tract.tract_id, phi.rank, phi.ground.size, mode)
        report = AxiomReport(mode=mode)
        if phi.tract.numeric:
            report.notes["max_deviation"] = 0.0
        report.checked += 1
        if phi.is_zero:
            report.add_failure("GP1", {})
            return report
        report.checked += 1
        if not self.matroid_service.is_basis_family(phi.ground.size, phi.support_bases()):
            report.add_failure("support", {"bases": [phi.ground.names(b) for b in phi.support_bases()]})

        r, m = phi.rank, phi.ground.size
        tag = "GP3" if mode == "strong" else "GP3'"
        if r >= 1:
            for big in combinations(range(m), r + 1):
                for small in combinations(range(m), r - 1):
                    if mode == "weak" and len(set(big) - set(small)) != 3:
                        continue
                    s = self.relation_sum(phi, big, small)
                    report.checked += 1
                    if not report.accepts(phi.tract, s, weak=mode == "weak"):
                        report.add_failure(tag, {"I": phi.ground.names(big), "J": phi.ground.names(small)},
                                           ElementCodec.format_sum(phi.tract.tract_id, s))
        logger.debug("GP 校验结束: %s, 失败 %d 项", report.verdict.value, len(report.failures))
        return report

    # ---------- 圈 ----------

    def _circuit_from_basis(self, phi: GPFunction, x0: int, basis: int) -> Vector:
        # X(x_i)/X(x_0) = (-1)^i φ(x_0, x_1..x̂_i..x_r) / φ(x_1..x_r)
        tract = phi.tract
        xs = BitsetUtil.to_indices(basis)
        denominator = phi.value(xs)
        entries = [ZERO] * phi.ground.size
        entries[x0] = tract.one
        for i, xi in enumerate(xs, start=1):
            numerator = self.gp_eval(phi, (x0,) + xs[:i - 1] + xs[i:])
            if numerator.is_zero:
                continue
            ratio = tract.div(numerator, denominator)
            entries[xi] = tract.negate(ratio) if i % 2 == 1 else ratio
        return Vector(tract, tuple(entries))

    def circuits_from_gp(self, phi: GPFunction) -> CircuitSet:
        """
        对支撑拟阵的每个圈 C 取 x0 = min C，用每个包含 C \\ x0 的基计算一次，
        结果必须射影一致

        Raises:
            InconsistencyError: 不同基给出的比值不一致，witness 给出这两个基
        """
        matroid = self.support_matroid(phi)
        reps: List[Vector] = []
        for circuit in matroid.circuits:
            x0 = BitsetUtil.to_indices(circuit)[0]
            rest = circuit & ~(1 << x0)
            found: Optional[Vector] = None
            found_basis = 0
            for basis in matroid.bases:
                if not BitsetUtil.is_subset(rest, basis):
                    continue
                vector = self._circuit_from_basis(phi, x0, basis).normalized()
                if vector.support != circuit:
                    raise InconsistencyError("圈向量的支撑与支撑拟阵的圈不符", {
                        "circuit": phi.ground.names(circuit), "basis": phi.ground.names(basis)})
                if found is None:
                    found, found_basis = vector, basis
                elif not found.is_close(vector):
                    raise InconsistencyError("圈的比值与基的选取有关", {
                        "circuit": phi.ground.names(circuit),
                        "bases": [phi.ground.names(found_basis), phi.ground.names(basis)],
                    })
            reps.append(found)
        return CircuitSet.of(phi.tract, phi.ground, reps)

    # ---------- 对偶与子式 ----------

    def dual_gp(self, phi: GPFunction) -> GPFunction:
        """φ*(S) = sign(S, S')·τ(φ(S'))，S' 为 S 的补集"""
        tract, m = phi.tract, phi.ground.size
        values: Dict[Tuple[int, ...], TractElement] = {}
        for subset in combinations(range(m), m - phi.rank):
            complement = tuple(i for i in range(m) if i not in subset)
            value = phi.value(complement)
            if value.is_zero:
                continue
            value = tract.involution(value)
            if BitsetUtil.inversions(subset + complement) % 2 == 1:
                value = tract.negate(value)
            values[subset] = value
        return GPFunction.of(tract, phi.ground, m - phi.rank, values)

    @staticmethod
    def canonicalize(phi: GPFunction) -> GPFunction:
        """把字典序第一个非零值缩放为 1"""
        if phi.is_zero:
            return phi
        tract = phi.tract
        scale = tract.inverse(phi.values[0][1])
        return GPFunction.of(tract, phi.ground, phi.rank,
                             {subset: tract.mul(scale, value) for subset, value in phi.values})

    def gp_minor(self, phi: GPFunction, mask: int, op: str) -> GPFunction:
        """
        收缩取 A 的极大独立子集 a 接在后面：(φ/A)(x) = φ(x, a)
        删除用 A 中元素把 E \\ A 的基扩充成 M 的基，扩充部分 b 接在后面：(φ\\A)(x) = φ(x, b)
        结果规范化
        """
        if op not in MINOR_OPS:
            raise InvalidInputError(f"未知的子式操作: {op}")
        if mask & ~phi.ground.full:
            raise InvalidInputError("子集超出基础集")
        if mask == 0:
            return self.canonicalize(phi)
        if mask == phi.ground.full:
            raise InvalidInputError("不能删去全部元素")
        matroid = self.support_matroid(phi)
        ground, keep = phi.ground.remove(mask)
        new_index = {old: new for new, old in enumerate(keep)}
        if op == "contract":
            tail = BitsetUtil.to_indices(matroid.max_independent_subset(mask))
        else:
            rest_basis = matroid.max_independent_subset(phi.ground.full & ~mask)
            extended = rest_basis
            for a in BitsetUtil.to_indices(mask):
                if matroid.is_independent(extended | 1 << a):
                    extended |= 1 << a
            tail = BitsetUtil.to_indices(extended & mask)
        new_rank = phi.rank - len(tail)
        values = {}
        for xs in combinations(keep, new_rank):
            value = self.gp_eval(phi, xs + tail)
            if not value.is_zero:
                values[tuple(new_index[x] for x in xs)] = value
        return self.canonicalize(GPFunction.of(phi.tract, ground, new_rank, values))

    # ---------- 由圈重构 ----------

    def _exchange_value(self, circuits: CircuitSet, matroid: ClassicalMatroid, basis: int,
                        basis_value: TractElement, e: int, f: int) -> TractElement:
        # X(f)/X(e) = -φ(e, rest)/φ(f, rest)，X 是 f 关于 basis 的基本圈
        tract = circuits.tract
        x = circuits.rep_for_support(self.matroid_service.fundamental_circuit(matroid, basis, f))
        if x is None or x[e].is_zero:
            raise InconsistencyError("基本圈缺失", {"basis": matroid.ground.names(basis),
                                                 "element": matroid.ground.labels[f]})
        rest = BitsetUtil.to_indices(basis & ~(1 << e))
        phi_e_rest = basis_value
        if sum(1 for y in rest if y < e) % 2 == 1:
            phi_e_rest = tract.negate(phi_e_rest)
        phi_f_rest = tract.negate(tract.mul(phi_e_rest, tract.div(x[e], x[f])))
        if sum(1 for y in rest if y < f) % 2 == 1:
            phi_f_rest = tract.negate(phi_f_rest)
        return phi_f_rest

    def gp_from_circuits(self, circuits: CircuitSet) -> GPFunction:
        """
        字典序第一个基取值 1，沿基交换图的生成树传播，再校验所有非树边

        Raises:
            NotRepresentableError: 某条闭合路径上比值不一致，witness 给出该回路上的基
        """
        tract, ground = circuits.tract, circuits.ground
        matroid = self.matroid_service.matroid_from_circuits(ground, circuits.supports())
        bases = sorted(matroid.bases, key=BitsetUtil.to_indices)
        basis_set = set(bases)
        root = bases[0]
        values: Dict[int, TractElement] = {root: tract.one}
        parent: Dict[int, Optional[int]] = {root: None}
        queue = deque([root])

        def path(b: int) -> List[List[str]]:
            result = []
            while b is not None:
                result.append(ground.names(b))
                b = parent[b]
            return result

        while queue:
            basis = queue.popleft()
            for e in BitsetUtil.to_indices(basis):
                for f in BitsetUtil.to_indices(ground.full & ~basis):
                    neighbor = (basis & ~(1 << e)) | 1 << f
                    if neighbor not in basis_set:
                        continue
                    predicted = self._exchange_value(circuits, matroid, basis, values[basis], e, f)
                    if neighbor not in values:
                        values[neighbor] = predicted
                        parent[neighbor] = basis
                        queue.append(neighbor)
                    elif not tract.is_close(values[neighbor], predicted):
                        cycle = list(reversed(path(basis))) + path(neighbor)
                        raise NotRepresentableError("基交换图上的比值不一致", {"cycle": cycle})
        return GPFunction.of(tract, ground, matroid.rank_value,
                             {BitsetUtil.to_indices(b): v for b, v in values.items()})

    # ---------- 推出与等价 ----------

    @staticmethod
    def pushforward_gp(hom: TractHom, phi: GPFunction) -> GPFunction:
        if phi.tract.tract_id != hom.source.tract_id:
            raise MismatchError(f"同态源 {hom.source.tract_id} 与 GP 函数的 tract {phi.tract.tract_id} 不符")
        return GPFunction.of(hom.target, phi.ground, phi.rank,
                             {subset: hom(value) for subset, value in phi.values})

    @staticmethod
    def is_equivalent(phi: GPFunction, psi: GPFunction) -> bool:
        """相差一个单位倍数"""
        if phi.tract.tract_id != psi.tract.tract_id or phi.rank != psi.rank \
                or phi.ground.size != psi.ground.size:
            return False
        if [s for s, _ in phi.values] != [s for s, _ in psi.values]:
            return False
        if phi.is_zero:
            return True
        tract = phi.tract
        scale = tract.div(phi.values[0][1], psi.values[0][1])
        return all(tract.is_close(a, tract.mul(scale, b))
                   for (_, a), (_, b) in zip(phi.values, psi.values))
